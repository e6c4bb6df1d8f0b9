#pragma once

#include <string>

#include "effsq/hom.hpp"
#include "effsq/pushout.hpp"
#include "effsq/verdict.hpp"

namespace effsq {

// Decidable membership oracles for the classes M the effectiveness checks
// quantify over. Every kind except AllMorphisms contains only monos, and
// membership is monotone along Isos < SplitMonos < PureMonos < Monos < All.
enum class ClassKind { AllMorphisms, Monos, PureMonos, SplitMonos, Isos };

struct MorphismClass {
    ClassKind kind = ClassKind::AllMorphisms;

    bool operator==(const MorphismClass& o) const = default;
};

// Canonical CLI / schema names: all, mono, pure, split, iso.
std::string class_name(const MorphismClass& m);
MorphismClass class_from_name(const std::string& name); // throws MismatchError

bool contains(const MorphismClass& m, const Hom& h);

// Purity decided by the split-summand criterion: h is pure iff it is mono
// and admits a retraction. Among finitely generated abelian groups pure
// subgroups are exactly the direct summands, so this is exact; the
// n-divisibility element oracle cross-checks it in the test suites.
bool is_pure_mono(const Hom& h);

// Like contains(), but explains failures (kernel generator for a mono
// failure, missing retraction for purity, nontrivial cokernel for isos).
Verdict membership_verdict(const MorphismClass& m, const Hom& h);

// Instance-level checkers for the closure conditions a nice class must
// satisfy. Failures carry counterexample witnesses; coherence reports
// vacuous passes distinctly so suites do not count vacuity as evidence.
Verdict check_normal_instance(const MorphismClass& m, const Hom& f, const Hom& g);
Verdict check_coherent_instance(const MorphismClass& m, const Hom& f, const Hom& g);
Verdict check_coclan_instance(const MorphismClass& m, const Hom& mono_leg, const Hom& g);
Verdict check_retract_closed_instance(const MorphismClass& m, const Hom& f, const Hom& g,
                                      const Hom& u, const Hom& v, const Hom& r, const Hom& s);

} // namespace effsq
