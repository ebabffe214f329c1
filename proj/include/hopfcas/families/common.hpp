#pragma once

// Shared scaffolding for the explicit family constructors: building
// comultiplication, counit and antipode tables from generator values by
// (anti)homomorphic extension along normal-form words.

#include "../repnlib.hpp"

namespace hopfcas::families {

/// Parity of the permutation interleaving two disjoint ascending bitmask
/// words: (-1)^{#{(s,t) in S x T : s > t}}.
inline int interleave_sign(unsigned long s_mask, unsigned long t_mask) {
    int inversions = 0;
    for (unsigned long t = t_mask; t; t &= t - 1) {
        unsigned long tbit = t & ~(t - 1);
        unsigned long above = s_mask & ~(tbit | (tbit - 1));
        inversions += __builtin_popcountl(above);
    }
    return inversions % 2 == 0 ? 1 : -1;
}

inline int popcount(unsigned long m) { return __builtin_popcountl(m); }

/// Fill comult/counit/antipode tables by extending the generator values:
/// Delta and eps multiplicatively, S anti-multiplicatively, along each basis
/// element's normal-form word.  Requires the mult provider to be in place.
inline void extend_structure_from_generators(HopfAlgebra& H,
                                             const std::map<long, SparseRow>& gen_comult,
                                             const std::map<long, Cyclo>& gen_counit,
                                             const std::map<long, SparseRow>& gen_antipode) {
    const long d = H.dim;
    H.comult_rows.assign(d, {});
    H.counit_vec.assign(d, Cyclo(0));
    H.antipode_rows.assign(d, {});
    for (long i = 0; i < d; ++i) {
        std::vector<long> word = H.basis_word(i);
        SparseRow delta = H.ten_unit();
        Cyclo eps(1);
        SparseRow s = H.unit;
        for (long g : word) {
            delta = H.ten_mul(delta, gen_comult.at(g));
            eps *= gen_counit.at(g);
            s = H.mul(gen_antipode.at(g), s); // reversed order
        }
        H.comult_rows[i] = std::move(delta);
        H.counit_vec[i] = eps;
        H.antipode_rows[i] = std::move(s);
    }
}

} // namespace hopfcas::families
