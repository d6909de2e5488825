#pragma once

#include <string>

#include "updraw/drawing.hpp"
#include "updraw/graph.hpp"

namespace updraw {

/* graph schema:
 * {
 *   "vertices": ["s", ...],
 *   "edges": [{"id": "e1", "tail": "s", "head": "a"}, ...],
 *   "rotation": {"s": ["e1", ...]},   clockwise
 *   "source": "s", "sink": "t",
 *   "outer": ["e1", ...]              optional
 * }
 */
PlaneStGraph graph_from_json(const std::string& text);
std::string graph_to_json(const PlaneStGraph& g);

/* drawing schema:
 * {
 *   "vertices": {"s": [x, y], ...},
 *   "edges": [{"tail": "s", "head": "a", "bends": [[x, y], ...]}, ...]
 * }
 */
Drawing drawing_from_json(const std::string& text);
std::string drawing_to_json(const Drawing& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace updraw
