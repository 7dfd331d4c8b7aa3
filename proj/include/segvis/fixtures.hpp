#pragma once

#include "segvis/polygon.hpp"

namespace segvis {

SimplePolygon fixture_square();
SimplePolygon fixture_lshape();

/// 8-gon with a single deep reflex notch.
SimplePolygon fixture_spike();

/// Comb with k upward teeth; tooth/gap heights are jittered so that no three
/// vertices are collinear.
SimplePolygon fixture_comb(int k);

/// True iff no three polygon vertices are collinear (any triple, not just
/// consecutive ones). The decomposition corpus is kept in this position.
bool in_general_position(const SimplePolygon& poly);

}  // namespace segvis
