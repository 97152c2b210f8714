#pragma once

#include <functional>
#include <string>
#include <vector>

#include <drinfeld/drinfeld.hpp>

namespace fixtures {

using namespace drinfeld;

inline const ManinTriple& canonical(Series s, int n) { return *cached_split(s, n, SplittingSpec{}); }

/// alg with the bracket [x,y] replaced by value.
inline LieAlgebra with_bracket(const LieAlgebra& alg, const GeneratorId& x, const GeneratorId& y, const Element& value)
{
    StructureTable t = alg.table();
    t.set(alg.index_of(x), alg.index_of(y), alg.to_vec(value));
    return LieAlgebra(alg.series(), alg.rank(), alg.basis(), std::move(t));
}

/// First stored pair p < q of a table with a nonzero bracket.
inline std::pair<Index, Index> first_nonzero(const StructureTable& t)
{
    for (Index p = 0; p < t.dim(); ++p)
        for (Index q = p + 1; q < t.dim(); ++q)
            if (!t.at(p, q).is_zero()) return {p, q};
    throw std::logic_error("table is abelian");
}

/// The table with the leading coefficient of its first nonzero bracket
/// multiplied by factor.
inline StructureTable scale_one_constant(StructureTable t, const Scalar& factor)
{
    const auto [p, q] = first_nonzero(t);
    Vec v = t.at(p, q);
    const auto [r, x] = *v.begin();
    v.add(r, x * (factor - Scalar(1)));
    t.set(p, q, std::move(v));
    return t;
}

inline CocommutatorTable scale_delta(CocommutatorTable d, const GeneratorId& g, const Scalar& factor)
{
    d.delta[d.index_of(g)] *= factor;
    return d;
}

/// One verifier together with an unmutated baseline and a single-coefficient
/// mutation that must make it fail.
struct Mutation {
    std::string check;
    std::string description;
    std::function<Report()> baseline;
    std::function<Report()> mutated;
};

inline std::vector<Mutation> mutations()
{
    std::vector<Mutation> out;

    out.push_back({"jacobi", "B2 with [U1,V1] = 2 H1", [] { return verify_jacobi(canonical(Series::B, 2).original); },
                   [] {
                       const auto& alg = canonical(Series::B, 2).original;
                       return verify_jacobi(with_bracket(alg, U(1), V(1), Scalar(2) * elem(H(1))));
                   }});

    out.push_back({"closure", "A1 with an x^1 component added to [X1,F1,2]",
                   [] { return verify_closure(canonical(Series::A, 1)); },
                   [] {
                       ManinTriple t = canonical(Series::A, 1);
                       const Index x1 = t.rotated.index_of(Xp(1)), f12 = t.rotated.index_of(F(1, 2));
                       StructureTable tab = t.rotated.table();
                       Vec v = tab.at(x1, f12);
                       v.add(t.rotated.index_of(xm(1)), Scalar(1));
                       tab.set(x1, f12, std::move(v));
                       t.rotated = LieAlgebra(t.rotated.series(), t.rotated.rank(), t.rotated.basis(), std::move(tab));
                       return verify_closure(t);
                   }});

    auto pairing_mutant = [](Series s, int n, Scalar value) {
        ManinTriple t = canonical(s, n);
        t.pairing(0, 0) = std::move(value);
        return t;
    };

    out.push_back({"pairing", "A1 with <x^1,X1> = 2", [] { return verify_pairing(canonical(Series::A, 1)); },
                   [=] { return verify_pairing(pairing_mutant(Series::A, 1, Scalar(2))); }});

    out.push_back({"reconstruction", "A1 with <x^1,X1> = 2",
                   [] { return verify_reconstruction(canonical(Series::A, 1)); },
                   [=] { return verify_reconstruction(pairing_mutant(Series::A, 1, Scalar(2))); }});

    out.push_back({"compatibility", "C2 with one s- structure constant negated",
                   [] { return verify_compatibility(canonical(Series::C, 2)); },
                   [] {
                       ManinTriple t = canonical(Series::C, 2);
                       t.c = scale_one_constant(t.c, Scalar(-1));
                       return verify_compatibility(t);
                   }});

    out.push_back({"selfdual", "B2 with one s- structure constant doubled",
                   [] { return verify_self_duality(canonical(Series::B, 2)); },
                   [] {
                       ManinTriple t = canonical(Series::B, 2);
                       t.c = scale_one_constant(t.c, Scalar(2));
                       return verify_self_duality(t);
                   }});

    out.push_back({"forminv", "D2 with the form entry <x^1,X1> zeroed",
                   [] { return verify_form_invariance(canonical(Series::D, 2)); },
                   [=] { return verify_form_invariance(pairing_mutant(Series::D, 2, Scalar())); }});

    out.push_back({"delta-agree", "A2 explicit table with the sign of delta(F1,2) flipped",
                   [] {
                       const auto& t = canonical(Series::A, 2);
                       return verify_delta_agreement(cocommutator_from_structure(t), cocommutator_explicit(t.original));
                   },
                   [] {
                       const auto& t = canonical(Series::A, 2);
                       return verify_delta_agreement(cocommutator_from_structure(t),
                                                     scale_delta(cocommutator_explicit(t.original), F(1, 2), Scalar(-1)));
                   }});

    out.push_back({"cocycle", "B2 with delta(F1,2) doubled",
                   [] {
                       const auto& t = canonical(Series::B, 2);
                       return verify_cocycle(t.original, cocommutator_from_structure(t));
                   },
                   [] {
                       const auto& t = canonical(Series::B, 2);
                       return verify_cocycle(t.original, scale_delta(cocommutator_from_structure(t), F(1, 2), Scalar(2)));
                   }});

    out.push_back({"cojacobi", "A2 with delta(F1,2) doubled",
                   [] { return verify_cojacobi(cocommutator_from_structure(canonical(Series::A, 2))); },
                   [] {
                       return verify_cojacobi(
                           scale_delta(cocommutator_from_structure(canonical(Series::A, 2)), F(1, 2), Scalar(2)));
                   }});

    out.push_back({"subbialg", "A1 with F1,2∧F2,1 added to delta(F1,2)",
                   [] {
                       const auto& t = canonical(Series::A, 1);
                       return verify_subbialgebra(t.original, cocommutator_from_structure(t), half_span(t, true));
                   },
                   [] {
                       const auto& t = canonical(Series::A, 1);
                       CocommutatorTable d = cocommutator_from_structure(t);
                       const Index f12 = t.original.index_of(F(1, 2)), f21 = t.original.index_of(F(2, 1));
                       d.delta[f12] += wedge(Vec(f12), Vec(f21));
                       return verify_subbialgebra(t.original, d, half_span(t, true));
                   }});

    out.push_back({"coboundary", "A1 r-matrix with r_t dropped",
                   [] {
                       const auto& t = canonical(Series::A, 1);
                       return verify_coboundary(t.original, cocommutator_from_structure(t), build_r_matrix(t));
                   },
                   [] {
                       const auto& t = canonical(Series::A, 1);
                       RMatrix r = build_r_matrix(t);
                       r.r_t = Tensor2();
                       return verify_coboundary(t.original, cocommutator_from_structure(t), r);
                   }});

    out.push_back({"cybe", "A2 non-skew element with the F2,1⊗F1,2 term dropped",
                   [] {
                       const auto& t = canonical(Series::A, 2);
                       return verify_cybe(build_r_matrix(t), t.original);
                   },
                   [] {
                       const auto& t = canonical(Series::A, 2);
                       RMatrix r = build_r_matrix(t);
                       r.nonskew.erase({t.original.index_of(F(2, 1)), t.original.index_of(F(1, 2))});
                       return verify_cybe(r, t.original);
                   }});

    out.push_back({"twist", "C2 r_t with an H1∧H2 term added (I -> 0 variant)",
                   [] {
                       const auto& t = canonical(Series::C, 2);
                       return verify_twist_triviality(t.original, build_r_matrix(t), TwistVariant::zeroed);
                   },
                   [] {
                       const auto& t = canonical(Series::C, 2);
                       RMatrix r = build_r_matrix(t);
                       r.r_t += wedge(Vec(t.original.index_of(H(1))), Vec(t.original.index_of(H(2))));
                       return verify_twist_triviality(t.original, r, TwistVariant::zeroed);
                   }});

    out.push_back({"chain", "B1 into B2 under the index-preserving injection",
                   [] { return verify_chain_embedding(Series::B, 1).combined("chain"); },
                   [] { return verify_chain_embedding(Series::B, 1, 0).combined("chain"); }});

    out.push_back({"rep", "B1 table with [U1,V1] = 2 H1 against the fermionic rep",
                   [] { return verify_rep_homomorphism(fermionic_rep(Series::B, 1), canonical(Series::B, 1).original); },
                   [] {
                       const auto& alg = canonical(Series::B, 1).original;
                       return verify_rep_homomorphism(fermionic_rep(Series::B, 1),
                                                      with_bracket(alg, U(1), V(1), Scalar(2) * elem(H(1))));
                   }});

    out.push_back({"casimir", "D3 Drinfeld Casimir with the [f^1,2, F1,2]_+ term dropped",
                   [] {
                       const auto& t = canonical(Series::D, 3);
                       return casimir_check(fermionic_rep(Series::D, 3), drinfeld_casimir(t), t.original);
                   },
                   [] {
                       const auto& t = canonical(Series::D, 3);
                       CasimirElement c = drinfeld_casimir(t);
                       std::erase_if(c.terms, [](const auto& term) { return term.b == elem(F(1, 2)); });
                       return casimir_check(fermionic_rep(Series::D, 3), c, t.original);
                   }});

    return out;
}

}  // namespace fixtures
