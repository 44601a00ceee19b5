#pragma once

#include <vector>

#include "lcmlat/gcd_set.hpp"

namespace lcmlat::known {

/// {1,2,3,5,66,70,255,39270}: eight elements, cube order, singular.
GcdSet s8();
/// {1,2,3,4,5,6,10,45,180}: the first nine-element counterexample (class 9_I).
GcdSet s9_class_i();
/// {1,5,11,17,19,748,1463,2907,4476780}: class 9_J, singular.
GcdSet s9_class_j();
/// The 9_J example with 5 replaced by 255, the label its Hasse diagram
/// usually carries. Not GCD closed: gcd(255, 2907) = 51.
std::vector<Integer> s9_class_j_diagram_labels();
GcdSet s13();
GcdSet s14();
GcdSet s16();
/// {1,2,15,42}: singular LCM matrix on a set that is not GCD closed.
std::vector<Integer> bourque_ligh_values();

}  // namespace lcmlat::known
