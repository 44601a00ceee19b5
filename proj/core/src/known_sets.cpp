#include "lcmlat/known_sets.hpp"

#include <initializer_list>

namespace lcmlat::known {

namespace {

std::vector<Integer> values(std::initializer_list<const char*> decimals) {
  std::vector<Integer> out;
  for (const char* d : decimals) out.emplace_back(d, 10);
  return out;
}

}  // namespace

GcdSet s8() { return GcdSet::build(values({"1", "2", "3", "5", "66", "70", "255", "39270"}), "S8"); }

GcdSet s9_class_i() {
  return GcdSet::build(values({"1", "2", "3", "4", "5", "6", "10", "45", "180"}), "S9_I");
}

// The usual 9_J example lists 5 in the set, but its Hasse diagram labels
// that element 255 and its Psi sum carries -1/255. Only the listed
// set is consistent: it is GCD closed, its order is 9_J and Psi(top) = 0 once
// the -1/255 term reads -1/5. With 255 the set is not GCD closed.
GcdSet s9_class_j() {
  return GcdSet::build(
      values({"1", "5", "11", "17", "19", "748", "1463", "2907", "4476780"}), "S9_J");
}

std::vector<Integer> s9_class_j_diagram_labels() {
  return values({"1", "11", "17", "19", "255", "748", "1463", "2907", "4476780"});
}

GcdSet s13() {
  return GcdSet::build(values({"1", "2", "3", "13", "23", "25", "41", "75", "369", "533", "6877",
                               "16675", "3679538850"}),
                       "S13");
}

GcdSet s14() {
  return GcdSet::build(values({"1", "2", "3", "6", "7", "11", "13", "19", "56", "147", "209",
                               "1859", "196859", "33105384312"}),
                       "S14");
}

GcdSet s16() {
  return GcdSet::build(values({"1", "2", "3", "5", "7", "14", "20", "35", "54", "231", "255",
                               "1820", "45738", "137445", "39308760", "3029801294520"}),
                       "S16");
}

std::vector<Integer> bourque_ligh_values() { return values({"1", "2", "15", "42"}); }

}  // namespace lcmlat::known
