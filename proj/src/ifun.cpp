#include "qkwc/ifun.hpp"

#include <cctype>

namespace qkwc {

namespace {

int dot(const std::vector<int> &form, const CurveClass &beta)
{
    if (form.size() != beta.size()) {
        throw spec_mismatch("linear form has the wrong rank");
    }
    int s = 0;
    for (std::size_t i = 0; i < form.size(); ++i) {
        s += form[i] * beta[i];
    }
    return s;
}

} // namespace

bool Prefactor::is_identity() const
{
    for (const auto &x : q_linear) {
        if (x != 0) {
            return false;
        }
    }
    for (const auto &row : q_quadratic) {
        for (const auto &x : row) {
            if (x != 0) {
                return false;
            }
        }
    }
    for (const auto &[u, form] : units) {
        for (int c : form) {
            if (c != 0) {
                return false;
            }
        }
    }
    return true;
}

int Prefactor::q_exponent(const CurveClass &beta) const
{
    Rational a = 0;
    if (!q_linear.empty()) {
        if (q_linear.size() != beta.size()) {
            throw spec_mismatch("prefactor q-form has the wrong rank");
        }
        for (std::size_t i = 0; i < beta.size(); ++i) {
            a += q_linear[i] * beta[i];
        }
    }
    if (!q_quadratic.empty()) {
        if (q_quadratic.size() != beta.size()) {
            throw spec_mismatch("prefactor quadratic form has the wrong rank");
        }
        for (std::size_t i = 0; i < beta.size(); ++i) {
            if (q_quadratic[i].size() != beta.size()) {
                throw spec_mismatch("prefactor quadratic form is not square");
            }
            for (std::size_t j = 0; j < beta.size(); ++j) {
                a += q_quadratic[i][j] * beta[i] * beta[j];
            }
        }
    }
    if (a.get_den() != 1) {
        throw invalid_input("prefactor q-exponent is not an integer");
    }
    return static_cast<int>(a.get_num().get_si());
}

RingElem Prefactor::unit_part(const RingSpecPtr &ring, const CurveClass &beta) const
{
    RingElem u(ring, 1);
    for (const auto &[base, form] : units) {
        u *= pow(base, dot(form, beta));
    }
    return u;
}

QLaurent one_minus_q(const RingSpecPtr &ring)
{
    QLaurent f(RingElem(ring, 1));
    f.add_term(1, RingElem(ring, -1));
    return f;
}

QRational hypergeom_term(const HypergeomSpec &spec, const CurveClass &beta)
{
    const auto &ring = spec.ring;
    QLaurent num(RingElem(ring, 1));
    std::vector<DenFactor> den;
    for (const auto &f : spec.factors) {
        if (!is_unit(f.base)) {
            throw not_a_unit("hypergeometric factor base is not a unit");
        }
        const int l = dot(f.form, beta);
        if (l >= 0) {
            for (int i = 1; i <= l; ++i) {
                den.push_back(DenFactor{i, f.base, f.exponent});
            }
        } else {
            for (int i = l + 1; i <= 0; ++i) {
                QLaurent g(RingElem(ring, 1));
                g.add_term(i, -f.base);
                for (int e = 0; e < f.exponent; ++e) {
                    num = num * g;
                }
            }
        }
    }
    for (const auto &p : spec.prefactors) {
        num = num.shifted(p.q_exponent(beta)) * p.unit_part(ring, beta);
    }
    return QRational(num, den);
}

NovikovSeries evaluate(const HypergeomSpec &spec, const Rational &d)
{
    auto cone = std::make_shared<const ConeSpec>(spec.cone->weights, d);
    NovikovSeries I(cone, spec.ring);
    for (const auto &beta : cone->classes_up_to(d)) {
        if (cone->degree(beta) == 0) {
            I.add_term(beta, QRational(QLaurent(RingElem(spec.ring, 1))));
        } else {
            I.add_term(beta, hypergeom_term(spec, beta));
        }
    }
    return I;
}

HypergeomSpec preset_projective(int n, const Rational &max_degree)
{
    if (n < 2) {
        throw invalid_input("projective preset needs n >= 2");
    }
    HypergeomSpec spec;
    spec.cone = std::make_shared<const ConeSpec>(std::vector<Rational>{1}, max_degree);
    spec.ring = make_ring({{"nu", n}});
    const RingElem p = RingElem(spec.ring, 1) - RingElem::generator(spec.ring, "nu");
    spec.factors.push_back(HypergeomFactor{p, {1}, n});
    spec.projective_n = n;
    return spec;
}

HypergeomSpec twist_I(HypergeomSpec spec, const Prefactor &prefactor)
{
    if (!prefactor.is_identity()) {
        spec.prefactors.push_back(prefactor);
    }
    return spec;
}

HypergeomSpec preset_by_name(const std::string &name, const Rational &max_degree)
{
    std::string base = name;
    bool qtwist = false;
    const std::string suffix = "-qtwist";
    if (base.size() > suffix.size() && base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0) {
        qtwist = true;
        base.resize(base.size() - suffix.size());
    }
    if (base.size() < 2 || base[0] != 'P') {
        throw invalid_input("unknown preset '" + name + "'");
    }
    for (std::size_t i = 1; i < base.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(base[i]))) {
            throw invalid_input("unknown preset '" + name + "'");
        }
    }
    const int k = std::stoi(base.substr(1));
    if (k < 1 || k > 12) {
        throw invalid_input("unknown preset '" + name + "'");
    }
    auto spec = preset_projective(k + 1, max_degree);
    if (qtwist) {
        Prefactor p;
        p.q_linear = {1};
        spec = twist_I(spec, p);
    }
    return spec;
}

QLaurent mu_beta(const NovikovSeries &I, const CurveClass &beta)
{
    if (I.cone()->degree(beta) == 0) {
        throw invalid_input("mu_beta is undefined for beta = 0");
    }
    if (I.cone()->degree(beta) > I.cone()->max_degree) {
        throw invalid_input("class lies beyond the Novikov truncation");
    }
    return split(QRational(one_minus_q(I.ring())) * I.coeff(beta)).plus;
}

MuSeries mu_geq_epsilon(const NovikovSeries &I, const Rational &epsilon)
{
    if (epsilon <= 0) {
        throw invalid_input("epsilon must be positive");
    }
    const Rational bound = 1 / epsilon;
    MuSeries out;
    for (const auto &beta : I.cone()->classes_up_to(std::min(bound, I.cone()->max_degree))) {
        if (I.cone()->degree(beta) == 0) {
            continue;
        }
        QLaurent mu = mu_beta(I, beta);
        if (!mu.is_zero()) {
            out.emplace(beta, std::move(mu));
        }
    }
    return out;
}

NovikovSeries small_j_from_I(const NovikovSeries &I)
{
    NovikovSeries J(I.cone(), I.ring());
    const QRational factor(one_minus_q(I.ring()));
    for (const auto &[beta, c] : I.terms()) {
        J.add_term(beta, factor * c);
    }
    return J;
}

} // namespace qkwc
