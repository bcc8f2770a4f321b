#pragma once

#include "powval/field.hpp"
#include "powval/polynomial.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace powval {

/// f = unit * prod g_i^i, g_i monic squarefree and pairwise coprime.
struct MultiplicityProfile {
    std::vector<std::pair<Polynomial, int>> parts;  // ascending multiplicity
    FieldElement unit;
    int s_plus = 0;     // largest multiplicity
    int t_bound = 0;    // upper bound on the number of irreducible factors
    Polynomial radical; // prod g_i
    int d = 0;          // deg radical

    Polynomial reconstruct() const;
};

MultiplicityProfile squarefree_decomposition(const Polynomial& f);

struct PowerfulVerdict {
    bool powerful = false;
    std::optional<PrimeFactor> witness;  // first prime with 0 < |ord| < s
};

/// s-powerful test on the fractional ideal: every nonzero exponent has |ord| >= s.
PowerfulVerdict is_powerful_element(const NumberField& field, const FieldElement& alpha, int s);

bool is_powerful_polynomial(const Polynomial& f, int s);

/// True when every multiplicity is at most s - 1 (membership condition of G).
bool multiplicities_below(const Polynomial& f, int s);

/// Representative of f modulo scaling by s-th powers in Q*: every prime
/// exponent of the leading coefficient lies in [0, s). The sign of the leading
/// coefficient survives for even s and is made positive for odd s.
Polynomial canonical_representative(const Polynomial& f, int s);

}  // namespace powval
