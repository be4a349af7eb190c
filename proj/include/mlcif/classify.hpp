#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlcif/build.hpp"

namespace mlcif {

enum class FamilyForm { star, a23, ahm, hilton_milner, two_maxgen, other };

struct RecognizedForm {
  FamilyForm tag = FamilyForm::other;
  int a = 0, b = 0;  // parameters for ahm(b) and two_maxgen(a,b)
  std::string str() const;
};

RecognizedForm parse_recognized_form(const std::string& s);

struct FamilyProfile {
  int rank = 0;                // minimum generator size over pgs ∪ hgens
  std::vector<ZSet> max_gens;  // generated-by-maximal generators
  int max_gen_count = 0;
  RecognizedForm form;
};

/// Rank, maximal generators, and the recognized named form of a family,
/// computed from its generating set.
FamilyProfile profile(const GeneratingSet& gens);

struct TwoMaxgenForm {
  std::optional<std::pair<int, int>> ab;
  std::string diagnostic;  // set when the shape does not match
};

/// For a generating set with exactly two maximal generators, the (a, b) such
/// that they are [a,b] and {1} ∪ [b-a+2, b] with b > 2a-1. A mismatch is a
/// diagnostic, not an error; a different maximal-generator count is a
/// contract violation.
TwoMaxgenForm match_two_maxgen(const GeneratingSet& gens);

enum class NamedFamily { star, a23, hilton_milner, ahm };

/// Build one of the named families from its canonical PGS:
/// star -> {}, a23 -> {[2,3]}, hilton_milner -> {[2,k+1]}, ahm -> {[2,b]}.
BuiltFamily make_named(NamedFamily name, int n, int k,
                       std::optional<int> b = {});

}  // namespace mlcif
