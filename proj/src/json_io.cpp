#include "qkwc/json_io.hpp"

namespace qkwc {

namespace {

const json &field(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw invalid_input(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

int int_from_json(const json &j)
{
    if (j.is_number_integer()) {
        return j.get<int>();
    }
    if (j.is_string()) {
        const Rational r = parse_rational(j.get<std::string>());
        if (r.get_den() == 1 && r.get_num().fits_sint_p()) {
            return static_cast<int>(r.get_num().get_si());
        }
    }
    throw invalid_input("expected an integer, got " + j.dump());
}

std::vector<int> int_vector_from_json(const json &j)
{
    if (!j.is_array()) {
        throw invalid_input("expected an integer array, got " + j.dump());
    }
    std::vector<int> out;
    for (const auto &x : j) {
        out.push_back(int_from_json(x));
    }
    return out;
}

std::vector<Rational> rational_vector_from_json(const json &j)
{
    if (!j.is_array()) {
        throw invalid_input("expected an array of rationals, got " + j.dump());
    }
    std::vector<Rational> out;
    for (const auto &x : j) {
        out.push_back(rational_from_json(x));
    }
    return out;
}

json class_json(const CurveClass &c)
{
    return json(c);
}

} // namespace

json to_json(const Rational &x)
{
    return to_string(x);
}

Rational rational_from_json(const json &j)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    throw invalid_input("expected an exact rational, got " + j.dump());
}

json to_json(const RingSpec &spec)
{
    json j = json::object();
    json nil = json::array();
    for (const auto &n : spec.nilpotents()) {
        nil.push_back(json::array({n.name, n.order}));
    }
    j["nilpotent"] = nil;
    j["units"] = spec.units();
    j["newton"] = {{"max_index", spec.newton_max()}, {"weight_cutoff", spec.weight_cutoff()}};
    json tv = json::array();
    for (const auto &t : spec.t_vars()) {
        tv.push_back(json::array({t.name, t.order}));
    }
    j["t_vars"] = tv;
    return j;
}

RingSpecPtr ring_spec_from_json(const json &j)
{
    if (!j.is_object()) {
        throw invalid_input("ring must be an object");
    }
    std::vector<RingSpec::Nilpotent> nil;
    if (j.contains("nilpotent")) {
        for (const auto &x : j.at("nilpotent")) {
            if (!x.is_array() || x.size() != 2 || !x[0].is_string()) {
                throw invalid_input("nilpotent entries are [name, order]");
            }
            nil.push_back({x[0].get<std::string>(), int_from_json(x[1])});
        }
    }
    std::vector<std::string> units;
    if (j.contains("units")) {
        for (const auto &x : j.at("units")) {
            if (!x.is_string()) {
                throw invalid_input("unit generators are names");
            }
            units.push_back(x.get<std::string>());
        }
    }
    int newton_max = 0;
    int weight_cutoff = 0;
    if (j.contains("newton")) {
        newton_max = int_from_json(field(j.at("newton"), "max_index"));
        weight_cutoff = int_from_json(field(j.at("newton"), "weight_cutoff"));
    }
    std::vector<RingSpec::TruncVar> tv;
    if (j.contains("t_vars")) {
        for (const auto &x : j.at("t_vars")) {
            if (!x.is_array() || x.size() != 2 || !x[0].is_string()) {
                throw invalid_input("t_vars entries are [name, order]");
            }
            tv.push_back({x[0].get<std::string>(), int_from_json(x[1])});
        }
    }
    return make_ring(std::move(nil), std::move(units), newton_max, weight_cutoff, std::move(tv));
}

json to_json(const RingElem &a)
{
    json j = json::object();
    for (const auto &t : a.terms()) {
        j[monomial_key(*a.spec(), t.mono)] = to_string(t.coeff);
    }
    return j;
}

RingElem ring_elem_from_json(const RingSpecPtr &spec, const json &j)
{
    if (j.is_number_integer() || j.is_string()) {
        return RingElem(spec, rational_from_json(j));
    }
    if (!j.is_object()) {
        throw invalid_input("ring element must be an object of monomial -> rational");
    }
    std::vector<Term> terms;
    for (const auto &[key, value] : j.items()) {
        terms.push_back(Term{parse_monomial_key(*spec, key), rational_from_json(value)});
    }
    return RingElem::from_terms(spec, std::move(terms));
}

json to_json(const QLaurent &f)
{
    json j = json::object();
    for (const auto &[e, c] : f.coeffs()) {
        j[std::to_string(e)] = to_json(c);
    }
    return j;
}

QLaurent qlaurent_from_json(const RingSpecPtr &spec, const json &j)
{
    if (!j.is_object()) {
        throw invalid_input("q-Laurent polynomial must be an object of exponent -> ring element");
    }
    QLaurent f(spec);
    for (const auto &[key, value] : j.items()) {
        f.add_term(int_from_json(json(key)), ring_elem_from_json(spec, value));
    }
    return f;
}

json to_json(const QRational &f)
{
    json den = json::array();
    for (const auto &d : f.den()) {
        den.push_back(json::array({d.a, to_json(d.u), d.mult}));
    }
    return {{"num", to_json(f.num())}, {"den", den}};
}

QRational qrational_from_json(const RingSpecPtr &spec, const json &j)
{
    const QLaurent num = qlaurent_from_json(spec, field(j, "num"));
    std::vector<DenFactor> den;
    if (j.contains("den")) {
        for (const auto &x : j.at("den")) {
            if (!x.is_array() || x.size() != 3) {
                throw invalid_input("denominator factors are [a, u, mult]");
            }
            den.push_back(DenFactor{int_from_json(x[0]), ring_elem_from_json(spec, x[1]), int_from_json(x[2])});
        }
    }
    return QRational(num, den);
}

json to_json(const ConeSpec &cone)
{
    json w = json::array();
    for (const auto &x : cone.weights) {
        w.push_back(to_json(x));
    }
    return {{"weights", w}, {"max_degree", to_json(cone.max_degree)}};
}

ConeSpecPtr cone_from_json(const json &j)
{
    return std::make_shared<const ConeSpec>(rational_vector_from_json(field(j, "weights")),
                                            rational_from_json(field(j, "max_degree")));
}

json to_json(const NovikovSeries &I)
{
    json terms = json::array();
    for (const auto &[beta, value] : I.terms()) {
        terms.push_back({{"class", class_json(beta)},
                         {"degree", to_json(I.cone()->degree(beta))},
                         {"value", to_json(value)},
                         {"pretty", to_string(value)}});
    }
    return {{"ring", to_json(*I.ring())}, {"cone", to_json(*I.cone())}, {"terms", terms}};
}

json to_json(const ConeSpec &cone, const MuSeries &mu)
{
    json terms = json::array();
    for (const auto &[beta, value] : mu) {
        terms.push_back({{"class", class_json(beta)},
                         {"degree", to_json(cone.degree(beta))},
                         {"value", to_json(value)},
                         {"pretty", to_string(value)}});
    }
    return {{"cone", to_json(cone)}, {"terms", terms}};
}

json to_json(const CorrelatorSeries &F)
{
    json basis = json::array();
    for (const auto &[label, value] : F.basis()) {
        basis.push_back({{"label", label}, {"class", class_json(F.label_class(label))}, {"value", to_json(value)}});
    }
    json terms = json::array();
    for (const auto &[s, c] : F.terms()) {
        json groups = json::array();
        for (const auto &g : s.groups) {
            groups.push_back(json::array({g.label, g.count}));
        }
        terms.push_back({{"genus", s.genus},
                         {"beta", class_json(s.beta)},
                         {"groups", groups},
                         {"coeff", to_json(c)},
                         {"symbol", to_string(s)}});
    }
    return {{"cone", to_json(*F.cone())}, {"basis", basis}, {"terms", terms}};
}

CorrelatorSeries correlator_series_from_json(const RingSpecPtr &ring, const json &j)
{
    CorrelatorSeries F(cone_from_json(field(j, "cone")));
    if (j.contains("basis")) {
        for (const auto &b : j.at("basis")) {
            const auto &label = field(b, "label");
            if (!label.is_string()) {
                throw invalid_input("basis labels are strings");
            }
            F.register_label(label.get<std::string>(), qlaurent_from_json(ring, field(b, "value")),
                             int_vector_from_json(field(b, "class")));
        }
    }
    for (const auto &t : field(j, "terms")) {
        CorrelatorSymbol s;
        s.genus = int_from_json(field(t, "genus"));
        s.beta = int_vector_from_json(field(t, "beta"));
        if (static_cast<int>(s.beta.size()) != F.cone()->rank()) {
            throw invalid_input("correlator class has the wrong rank");
        }
        for (const auto &g : field(t, "groups")) {
            if (!g.is_array() || g.size() != 2 || !g[0].is_string()) {
                throw invalid_input("insertion groups are [label, count]");
            }
            const int count = int_from_json(g[1]);
            if (count < 0) {
                throw invalid_input("insertion counts are nonnegative");
            }
            s.groups.push_back(InsertionGroup{g[0].get<std::string>(), count});
        }
        F.add_term(std::move(s), rational_from_json(field(t, "coeff")));
    }
    return F;
}

HypergeomSpec hypergeom_spec_from_json(const json &j)
{
    HypergeomSpec spec;
    spec.ring = ring_spec_from_json(field(j, "ring"));
    spec.cone = cone_from_json(field(j, "cone"));
    if (j.contains("factors")) {
        for (const auto &f : j.at("factors")) {
            HypergeomFactor h;
            h.base = ring_elem_from_json(spec.ring, field(f, "base"));
            h.form = int_vector_from_json(field(f, "form"));
            h.exponent = f.contains("exponent") ? int_from_json(f.at("exponent")) : 1;
            if (static_cast<int>(h.form.size()) != spec.cone->rank()) {
                throw invalid_input("factor form has the wrong rank");
            }
            spec.factors.push_back(std::move(h));
        }
    }
    if (j.contains("prefactors")) {
        for (const auto &p : j.at("prefactors")) {
            Prefactor pre;
            if (p.contains("q_linear")) {
                pre.q_linear = rational_vector_from_json(p.at("q_linear"));
            }
            if (p.contains("q_quadratic")) {
                for (const auto &row : p.at("q_quadratic")) {
                    pre.q_quadratic.push_back(rational_vector_from_json(row));
                }
            }
            if (p.contains("units")) {
                for (const auto &u : p.at("units")) {
                    pre.units.emplace_back(ring_elem_from_json(spec.ring, field(u, "base")),
                                           int_vector_from_json(field(u, "form")));
                }
            }
            spec = twist_I(spec, pre);
        }
    }
    if (j.contains("projective_n")) {
        spec.projective_n = int_from_json(j.at("projective_n"));
    }
    return spec;
}

json to_json(const Ledger &ledger)
{
    json out = json::array();
    for (const auto &[key, value] : ledger) {
        out.push_back({{"shape", key}, {"value", to_json(value)}, {"pretty", to_string(value)}});
    }
    return out;
}

} // namespace qkwc
