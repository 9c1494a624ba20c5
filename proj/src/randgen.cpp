#include "qkwc/randgen.hpp"

namespace qkwc::gen {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index)
{
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(master) ^ stream) ^ index);
}

int uniform_int(Rng &rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rational small_rational(Rng &rng, int num_bound, int den_bound)
{
    Rational r(uniform_int(rng, -num_bound, num_bound), uniform_int(rng, 1, den_bound));
    r.canonicalize();
    return r;
}

Rational nonzero_rational(Rng &rng, int num_bound, int den_bound)
{
    for (;;) {
        Rational r = small_rational(rng, num_bound, den_bound);
        if (r != 0) {
            return r;
        }
    }
}

namespace {

Monomial random_monomial(Rng &rng, const RingSpec &spec, int unit_bound, bool units_only)
{
    Monomial m;
    for (std::size_t i = 0; i < spec.num_vars(); ++i) {
        switch (spec.kind(i)) {
        case VarKind::nilpotent:
        case VarKind::tvar:
            m.exps[i] = units_only ? 0 : uniform_int(rng, 0, spec.order(i) - 1);
            break;
        case VarKind::unit:
            m.exps[i] = uniform_int(rng, -unit_bound, unit_bound);
            break;
        case VarKind::newton:
            break;
        }
    }
    if (!units_only && spec.newton_max() > 0) {
        int weight = 0;
        for (int tries = 0; tries < 2; ++tries) {
            const int idx = uniform_int(rng, 0, spec.newton_max());
            if (idx > 0 && weight + idx <= spec.weight_cutoff()) {
                m.exps[spec.newton_offset() + static_cast<std::size_t>(idx - 1)] += 1;
                weight += idx;
            }
        }
    }
    return m;
}

} // namespace

RingElem random_elem(Rng &rng, const RingSpecPtr &spec, int max_terms, int unit_bound)
{
    std::vector<Term> terms;
    const int n = uniform_int(rng, 0, max_terms);
    for (int i = 0; i < n; ++i) {
        terms.push_back(Term{random_monomial(rng, *spec, unit_bound, false), small_rational(rng)});
    }
    return RingElem::from_terms(spec, std::move(terms));
}

RingElem random_unit(Rng &rng, const RingSpecPtr &spec, int unit_bound)
{
    RingElem lead = RingElem::monomial(spec, random_monomial(rng, *spec, unit_bound, true), nonzero_rational(rng));
    std::vector<Term> rest;
    const auto noise = random_elem(rng, spec, 3, unit_bound);
    for (const auto &t : noise.terms()) {
        bool nilpotent = false;
        for (std::size_t i = 0; i < spec->num_vars(); ++i) {
            if (spec->kind(i) != VarKind::unit && t.mono.exps[i] != 0) {
                nilpotent = true;
            }
        }
        if (nilpotent) {
            rest.push_back(t);
        }
    }
    return lead * (RingElem(spec, 1) + RingElem::from_terms(spec, std::move(rest)));
}

QLaurent random_laurent(Rng &rng, const RingSpecPtr &spec, int lo, int hi, int max_terms, int unit_bound)
{
    QLaurent f(spec);
    for (int e = lo; e <= hi; ++e) {
        if (uniform_int(rng, 0, 2) == 0) {
            continue;
        }
        f.add_term(e, random_elem(rng, spec, max_terms, unit_bound));
    }
    return f;
}

QRational random_qrational(Rng &rng, const RingSpecPtr &spec, int max_factors)
{
    const int nf = uniform_int(rng, 1, max_factors);
    std::vector<DenFactor> den;
    for (int i = 0; i < nf; ++i) {
        int a = uniform_int(rng, -2, 2);
        if (a == 0) {
            a = 1;
        }
        den.push_back(DenFactor{a, random_unit(rng, spec, 1), uniform_int(rng, 1, 2)});
    }
    return QRational(random_laurent(rng, spec, -3, 3, 2, 1), den);
}

WallInput random_wall_input(Rng &rng, const RingSpecPtr &spec, int m, int classes, int r, int window)
{
    WallInput in;
    in.ring = spec;
    in.m = m;
    in.r = r;
    for (int i = 0; i < classes; ++i) {
        in.g0.push_back(random_laurent(rng, spec, -window, window, 4, 1));
        in.ginf.push_back(random_laurent(rng, spec, -window, window, 4, 1));
    }
    return in;
}

} // namespace qkwc::gen
