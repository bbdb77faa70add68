#pragma once

#include "epz/counting.hpp"
#include "epz/quadform.hpp"
#include "epz/special.hpp"

namespace epz {

// Enclosure zeta_Q(s) in disc(F1, F2bound).
struct PotterEvaluation {
  Complex s;
  double Z;
  Complex F1;
  double F2bound;
  // True when Re s = 3/4, the only line on which the F2 constant is derived.
  bool certified;
};

// Lattice series sum Q^{-s} with the main-term tail (2 pi/sqrt D) X^{1-s}/(s-1)
// added back, X doubled until stable. Test oracle only.
Complex zeta_q_series(const QuadraticForm& form, Complex s, double tol,
                      const EnumerationOptions& opts = {});

// Finite part of Potter's approximate equation. Re s > -1/4, s != 1.
Complex potter_f1(const QuadraticForm& form, double Z, Complex s,
                  const EnumerationOptions& opts = {});

// F1 from a list with cap >= Z.
Complex potter_f1_from(const QuadraticForm& form, const ValueList& list,
                       double Z, Complex s);

struct F2Bound {
  double value;
  bool certified;
};

// |s(s+1)| D^{3/4} pi^{-3/2} kappa^{-5/4} zeta(5/4) L(5/4) / Z
F2Bound potter_f2_bound(const QuadraticForm& form, double Z, Complex s);

PotterEvaluation potter_evaluate(const QuadraticForm& form, double Z,
                                 Complex s,
                                 const EnumerationOptions& opts = {});

// Factor chi(s) with zeta_Q(s) = chi(s) zeta_Q(1-s):
// (2 pi/sqrt D)^{2s-1} Gamma(1-s)/Gamma(s).
Complex functional_factor(const QuadraticForm& form, Complex s);

Complex functional_equation(const QuadraticForm& form, Complex s,
                            Complex zqAt1MinusS);

// zeta_Q(s) enclosure obtained from Potter at 1-s and the functional
// equation; both center and radius are multiplied by chi(s).
PotterEvaluation reflected_evaluate(const QuadraticForm& form, double Z,
                                    Complex s,
                                    const EnumerationOptions& opts = {});

} // namespace epz
