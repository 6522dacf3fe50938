#pragma once

#include <optional>
#include <string>
#include <vector>

#include "totcol/graph.hpp"

namespace totcol {

/// One step of a mock threshold build. Step i adds vertex i; `ref` is the
/// 0-based index of an earlier vertex (used by Pendant and CoDominant only).
struct MockStep {
  enum class Kind { Isolated, Pendant, CoDominant, Dominant };

  Kind kind = Kind::Isolated;
  int ref = -1;

  bool operator==(const MockStep&) const = default;
};

using MockThresholdScript = std::vector<MockStep>;

/// Throws precondition_error if some step references a vertex that does not exist yet.
void validate_script(const MockThresholdScript& script);

/// Builds the graph step by step; vertex i of the result is the vertex added at step i.
Graph build_mock_threshold(const MockThresholdScript& script);

/// Script plus the vertex of the recognized graph placed at each step.
struct MockThresholdOrdering {
  MockThresholdScript script;
  std::vector<Vertex> order;
};

/// Peels vertices whose degree in the remaining graph H is 0, 1, |H|-2 or
/// |H|-1, backtracking over choices (lowest vertex first). Returns nullopt when
/// no peel order exists.
std::optional<MockThresholdOrdering> recognize_mock_threshold(const Graph& g);

/// Compact text form, e.g. "I,D,P0,C1" (refs are 0-based).
std::string format_script(const MockThresholdScript& script);
MockThresholdScript parse_script(const std::string& text);

}  // namespace totcol
