#pragma once

// Shared presentation builders for the test suites.

#include "qkoszul/presentation.hpp"

namespace fixtures {

using namespace qkoszul;

// k<x,y | yx = q xy> encoded with x1 = x, x2 = y, q_12 = q^{-1}.
inline Presentation quantum_plane() {
    Presentation p = Presentation::make(2, 0, {}, MonomialOrder::lex);
    p.set_q(1, 2, LaurentScalar::parameter(1, 2).inverse());
    return p;
}

// k<x1,x2,x3 | x1x2 = q x2x1, x2x3 = q x3x2, x1x3 = q^{-1} x3x1 + x2>,
// with q the single formal parameter q1_2. Optionally x1^{N1} = 0.
inline Presentation uqsl3(int t = 0, int N1 = 2) {
    Presentation p = Presentation::make(3, t, t == 1 ? std::vector<int>{N1}
                                                     : std::vector<int>{});
    LaurentScalar q = LaurentScalar::parameter(1, 2);
    p.set_q(1, 2, q);
    p.set_q(2, 3, q);
    p.set_q(1, 3, q.inverse());
    p.set_p(1, 3, AlgebraElement::monomial_term(Monomial::generator(3, 2),
                                                LaurentScalar(1)));
    return p;
}

// Quantum symmetric quotient with fully symbolic q-table.
inline Presentation sq(int n, int t, std::vector<int> N) {
    return Presentation::make(n, t, std::move(N));
}

// Commutative k[x]/(x^N): n = 1, t = 1.
inline Presentation kxn(int N) { return Presentation::make(1, 1, {N}); }

// n = 3, t = 1, N = (2), all q = 1, x2 x3 = x3 x2 + x1. The central
// generator comes first so x1^2 is braided central.
inline Presentation heisenberg() {
    Presentation p = Presentation::make(3, 1, {2});
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) p.set_q(i, j, LaurentScalar(1));
    p.set_p(2, 3, AlgebraElement::monomial_term(Monomial::generator(3, 1),
                                                LaurentScalar(1)));
    return p;
}

inline AlgebraElement mono_elem(const Monomial& m) {
    return AlgebraElement::monomial_term(m, LaurentScalar(1));
}

inline AlgebraElement gen_elem(int n, int i) {
    return mono_elem(Monomial::generator(n, i));
}

}  // namespace fixtures
