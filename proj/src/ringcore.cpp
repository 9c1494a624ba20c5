#include "qkwc/ringcore.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "qkwc/kernels.hpp"

namespace qkwc {

RingSpec::RingSpec(std::vector<Nilpotent> nilpotents, std::vector<std::string> units, int newton_max,
                   int weight_cutoff, std::vector<TruncVar> t_vars)
    : nilpotents_(std::move(nilpotents)), units_(std::move(units)), newton_max_(newton_max),
      weight_cutoff_(weight_cutoff), t_vars_(std::move(t_vars))
{
    if (newton_max_ < 0 || weight_cutoff_ < 0) {
        throw invalid_input("Newton cutoffs must be nonnegative");
    }
    for (const auto &n : nilpotents_) {
        if (n.order < 1) {
            throw invalid_input("nilpotent order must be >= 1 for '" + n.name + "'");
        }
        kinds_.push_back(VarKind::nilpotent);
        orders_.push_back(n.order);
        names_.push_back(n.name);
    }
    for (const auto &u : units_) {
        kinds_.push_back(VarKind::unit);
        orders_.push_back(0);
        names_.push_back(u);
    }
    for (int m = 1; m <= newton_max_; ++m) {
        kinds_.push_back(VarKind::newton);
        orders_.push_back(m);
        names_.push_back("N" + std::to_string(m));
    }
    for (const auto &t : t_vars_) {
        if (t.order < 1) {
            throw invalid_input("truncation order must be >= 1 for '" + t.name + "'");
        }
        kinds_.push_back(VarKind::tvar);
        orders_.push_back(t.order);
        names_.push_back(t.name);
    }
    if (kinds_.size() > kMaxVars) {
        throw invalid_input("too many generators (max " + std::to_string(kMaxVars) + ")");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        const auto &name = names_[i];
        if (name.empty() || name.find_first_of("*^ ") != std::string::npos || name == "1") {
            throw invalid_input("bad generator name '" + name + "'");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[j] == name) {
                throw invalid_input("duplicate generator name '" + name + "'");
            }
        }
    }
}

std::optional<std::size_t> RingSpec::find(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t RingSpec::require(std::string_view name) const
{
    if (auto i = find(name)) {
        return *i;
    }
    throw invalid_input("unknown generator '" + std::string(name) + "'");
}

bool RingSpec::truncated(const Monomial &m) const
{
    int weight = 0;
    for (std::size_t i = 0; i < kinds_.size(); ++i) {
        switch (kinds_[i]) {
        case VarKind::nilpotent:
        case VarKind::tvar:
            if (m.exps[i] >= orders_[i] || m.exps[i] < 0) {
                return true;
            }
            break;
        case VarKind::newton:
            if (m.exps[i] < 0) {
                return true;
            }
            weight += orders_[i] * m.exps[i];
            break;
        case VarKind::unit:
            break;
        }
    }
    return weight > weight_cutoff_;
}

std::shared_ptr<const RingSpec> RingSpec::extended(const std::vector<std::string> &extra_units,
                                                   const std::vector<TruncVar> &extra_t_vars) const
{
    auto units = units_;
    units.insert(units.end(), extra_units.begin(), extra_units.end());
    auto tv = t_vars_;
    tv.insert(tv.end(), extra_t_vars.begin(), extra_t_vars.end());
    return std::make_shared<const RingSpec>(nilpotents_, std::move(units), newton_max_, weight_cutoff_,
                                            std::move(tv));
}

bool operator==(const RingSpec &a, const RingSpec &b)
{
    if (a.units_ != b.units_ || a.newton_max_ != b.newton_max_ || a.weight_cutoff_ != b.weight_cutoff_ ||
        a.nilpotents_.size() != b.nilpotents_.size() || a.t_vars_.size() != b.t_vars_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.nilpotents_.size(); ++i) {
        if (a.nilpotents_[i].name != b.nilpotents_[i].name || a.nilpotents_[i].order != b.nilpotents_[i].order) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.t_vars_.size(); ++i) {
        if (a.t_vars_[i].name != b.t_vars_[i].name || a.t_vars_[i].order != b.t_vars_[i].order) {
            return false;
        }
    }
    return true;
}

RingSpecPtr make_ring(std::vector<RingSpec::Nilpotent> nilpotents, std::vector<std::string> units, int newton_max,
                      int weight_cutoff, std::vector<RingSpec::TruncVar> t_vars)
{
    return std::make_shared<const RingSpec>(std::move(nilpotents), std::move(units), newton_max, weight_cutoff,
                                            std::move(t_vars));
}

bool same_ring(const RingSpecPtr &a, const RingSpecPtr &b)
{
    return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------

RingElem::RingElem(RingSpecPtr spec, const Rational &constant) : spec_(std::move(spec))
{
    if (constant != 0) {
        terms_.push_back(Term{Monomial{}, constant});
    }
}

RingElem RingElem::generator(RingSpecPtr spec, std::string_view name)
{
    Monomial m;
    m.exps[spec->require(name)] = 1;
    return monomial(std::move(spec), m);
}

RingElem RingElem::newton(RingSpecPtr spec, int m)
{
    if (m < 1) {
        throw invalid_input("Newton generators are indexed from 1");
    }
    if (m > spec->newton_max()) {
        return RingElem(std::move(spec));
    }
    Monomial mono;
    mono.exps[spec->newton_offset() + static_cast<std::size_t>(m - 1)] = 1;
    return monomial(std::move(spec), mono);
}

RingElem RingElem::monomial(RingSpecPtr spec, const Monomial &mono, const Rational &coeff)
{
    RingElem r(std::move(spec));
    if (coeff != 0 && !r.spec_->truncated(mono)) {
        r.terms_.push_back(Term{mono, coeff});
    }
    return r;
}

RingElem RingElem::from_terms(RingSpecPtr spec, std::vector<Term> terms)
{
    RingElem r(std::move(spec));
    kernels::normalize(*r.spec_, terms);
    r.terms_ = std::move(terms);
    return r;
}

bool RingElem::is_one() const
{
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

Rational RingElem::coefficient(const Monomial &mono) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                               [](const Term &t, const Monomial &m) { return t.mono < m; });
    if (it != terms_.end() && it->mono == mono) {
        return it->coeff;
    }
    return 0;
}

RingElem RingElem::constant_part() const
{
    RingElem r(spec_);
    for (const auto &t : terms_) {
        bool constant = true;
        for (std::size_t i = 0; i < spec_->num_vars(); ++i) {
            if (spec_->kind(i) != VarKind::unit && t.mono.exps[i] != 0) {
                constant = false;
                break;
            }
        }
        if (constant) {
            r.terms_.push_back(t);
        }
    }
    return r;
}

RingElem RingElem::operator-() const
{
    RingElem r(*this);
    for (auto &t : r.terms_) {
        t.coeff = -t.coeff;
    }
    return r;
}

void check_same_ring(const RingElem &a, const RingElem &b)
{
    if (!same_ring(a.spec(), b.spec())) {
        throw spec_mismatch("ring elements live over different coefficient rings");
    }
}

namespace {

// Merge of two sorted term lists with sign applied to the right operand.
std::vector<Term> merge_terms(const std::vector<Term> &a, const std::vector<Term> &b, bool subtract)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono < a[i].mono) {
            out.push_back(Term{b[j].mono, subtract ? Rational(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (c != 0) {
                out.push_back(Term{a[i].mono, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

RingElem &RingElem::operator+=(const RingElem &other)
{
    check_same_ring(*this, other);
    terms_ = merge_terms(terms_, other.terms_, false);
    return *this;
}

RingElem &RingElem::operator-=(const RingElem &other)
{
    check_same_ring(*this, other);
    terms_ = merge_terms(terms_, other.terms_, true);
    return *this;
}

RingElem operator*(const RingElem &a, const RingElem &b)
{
    check_same_ring(a, b);
    RingElem r(a.spec_);
    if (a.is_zero() || b.is_zero()) {
        return r;
    }
    if (a.size() * b.size() >= kernels::kParallelThreshold && kernels::max_threads() > 1) {
        r.terms_ = kernels::multiply_parallel(*a.spec_, a.terms_, b.terms_);
    } else {
        r.terms_ = kernels::multiply_serial(*a.spec_, a.terms_, b.terms_);
    }
    return r;
}

RingElem &RingElem::operator*=(const RingElem &other)
{
    *this = *this * other;
    return *this;
}

RingElem &RingElem::operator*=(const Rational &scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t.coeff *= scalar;
    }
    return *this;
}

bool operator==(const RingElem &a, const RingElem &b)
{
    check_same_ring(a, b);
    if (a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

RingElem pow(const RingElem &a, long e)
{
    if (e < 0) {
        return pow(invert(a), -e);
    }
    RingElem result(a.spec(), 1);
    RingElem base = a;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

bool is_unit(const RingElem &a)
{
    return a.constant_part().size() == 1;
}

RingElem invert(const RingElem &a)
{
    const RingElem c = a.constant_part();
    if (c.size() != 1) {
        throw not_a_unit("element is not a unit: " + to_string(a));
    }
    const auto &spec = a.spec();
    Monomial inv_mono;
    for (std::size_t i = 0; i < spec->num_vars(); ++i) {
        inv_mono.exps[i] = -c.terms()[0].mono.exps[i];
    }
    const RingElem c_inv = RingElem::monomial(spec, inv_mono, 1 / c.terms()[0].coeff);
    // a = c (1 + n) with n nilpotent.
    const RingElem n = c_inv * (a - c);
    RingElem sum(spec, 1);
    RingElem power(spec, 1);
    for (int k = 1;; ++k) {
        power = power * n;
        if (power.is_zero()) {
            break;
        }
        if (k % 2 == 1) {
            sum -= power;
        } else {
            sum += power;
        }
    }
    return sum * c_inv;
}

RingElem adams(int r, const RingElem &a)
{
    if (r == 0) {
        throw invalid_input("Adams operation index must be nonzero");
    }
    if (r == 1) {
        return a;
    }
    const auto &spec = a.spec();
    const int ar = std::abs(r);

    // Images of nilpotent generators: 1 - (1 - nu)^r.
    std::vector<RingElem> nil_images;
    for (std::size_t i = 0; i < spec->nilpotents().size(); ++i) {
        const RingElem one(spec, 1);
        const RingElem nu = RingElem::generator(spec, spec->var_name(i));
        nil_images.push_back(one - pow(one - nu, r));
    }
    // Power caches for nilpotent images.
    std::vector<std::vector<RingElem>> nil_powers(nil_images.size());
    auto nil_power = [&](std::size_t i, int e) -> const RingElem & {
        auto &cache = nil_powers[i];
        if (cache.empty()) {
            cache.emplace_back(spec, 1);
        }
        while (static_cast<int>(cache.size()) <= e) {
            cache.push_back(cache.back() * nil_images[i]);
        }
        return cache[static_cast<std::size_t>(e)];
    };

    RingElem result(spec);
    std::vector<Term> monomial_part;
    for (const auto &t : a.terms()) {
        Monomial m;
        bool vanished = false;
        for (std::size_t i = spec->unit_offset(); i < spec->num_vars() && !vanished; ++i) {
            const auto e = t.mono.exps[i];
            if (e == 0) {
                continue;
            }
            switch (spec->kind(i)) {
            case VarKind::unit:
                m.exps[i] = r * e;
                break;
            case VarKind::newton: {
                const int idx = spec->order(i) * ar;
                if (idx > spec->newton_max()) {
                    vanished = true;
                } else {
                    m.exps[spec->newton_offset() + static_cast<std::size_t>(idx - 1)] += e;
                }
                break;
            }
            case VarKind::tvar:
                m.exps[i] = ar * e;
                break;
            case VarKind::nilpotent:
                break;
            }
        }
        if (vanished) {
            continue;
        }
        RingElem image = RingElem::monomial(spec, m, t.coeff);
        for (std::size_t i = 0; i < spec->nilpotents().size() && !image.is_zero(); ++i) {
            if (t.mono.exps[i] != 0) {
                image = image * nil_power(i, t.mono.exps[i]);
            }
        }
        result += image;
    }
    return result;
}

std::vector<RingElem> sym_powers(int k, const RingElem &a)
{
    if (k < 0) {
        throw invalid_input("symmetric power index must be nonnegative");
    }
    std::vector<RingElem> h;
    h.emplace_back(a.spec(), 1);
    std::vector<RingElem> psi;
    for (int n = 1; n <= k; ++n) {
        psi.push_back(adams(n, a));
        RingElem acc(a.spec());
        for (int r = 1; r <= n; ++r) {
            acc += psi[static_cast<std::size_t>(r - 1)] * h[static_cast<std::size_t>(n - r)];
        }
        acc *= Rational(1, n);
        h.push_back(std::move(acc));
    }
    return h;
}

RingElem sym_power(int k, const RingElem &a)
{
    return sym_powers(k, a).back();
}

RingElem euler_class(std::span<const RingElem> lines)
{
    if (lines.empty()) {
        throw invalid_input("euler_class of an empty list needs a ring; use euler_class(spec, {})");
    }
    return euler_class(lines.front().spec(), lines);
}

RingElem euler_class(const RingSpecPtr &spec, std::span<const RingElem> lines)
{
    RingElem result(spec, 1);
    const RingElem one(spec, 1);
    for (const auto &line : lines) {
        result *= one - invert(line);
    }
    return result;
}

RingElem unit_monomial(const RingSpecPtr &spec, const std::vector<std::pair<std::string, int>> &exps)
{
    Monomial m;
    for (const auto &[name, e] : exps) {
        const auto i = spec->require(name);
        if (spec->kind(i) != VarKind::unit) {
            throw invalid_input("'" + name + "' is not a unit generator");
        }
        m.exps[i] += e;
    }
    return RingElem::monomial(spec, m);
}

RingElem twist_class(RingSpecPtr spec, const TwistData &data)
{
    RingElem exponent(spec);
    for (const auto &s : data.summands) {
        if (s.m == 0) {
            throw invalid_input("twisting summand index must be nonzero");
        }
        check_same_ring(exponent, s.cls);
        for (const auto &t : s.cls.terms()) {
            bool positive_order = false;
            for (std::size_t i = spec->tvar_offset(); i < spec->num_vars(); ++i) {
                if (t.mono.exps[i] > 0) {
                    positive_order = true;
                }
            }
            if (!positive_order) {
                throw invalid_input("twisting summand has a t-order-0 part; exp would not truncate");
            }
        }
        exponent += adams(s.m, s.cls) * Rational(1, s.m);
    }
    RingElem result(spec, 1);
    RingElem power(spec, 1);
    for (int k = 1;; ++k) {
        power = power * exponent * Rational(1, k);
        if (power.is_zero()) {
            break;
        }
        result += power;
    }
    std::vector<std::pair<std::string, int>> det;
    for (const auto &[name, c] : data.det) {
        det.emplace_back(name, -data.level * c);
    }
    return result * unit_monomial(spec, det);
}

ChiPreset ChiPreset::projective(const RingSpec &spec, std::string_view nilpotent_name)
{
    const auto idx = spec.require(nilpotent_name);
    if (spec.kind(idx) != VarKind::nilpotent) {
        throw invalid_input("'" + std::string(nilpotent_name) + "' is not a nilpotent generator");
    }
    const int n = spec.order(idx);
    std::map<std::vector<int>, Rational> values;
    // chi(P^i) = chi(O(-i)) = C(n-1-i, n-1) as a polynomial in i; nu^a = (1 - P)^a.
    for (int a = 0; a < n; ++a) {
        Rational v = 0;
        for (int i = 0; i <= a; ++i) {
            const Rational sign = (i % 2 == 0) ? 1 : -1;
            v += sign * binomial(a, i) * binomial(n - 1 - i, n - 1);
        }
        std::vector<int> key(spec.nilpotents().size(), 0);
        key[idx] = a;
        values[key] = v;
    }
    return ChiPreset(std::move(values));
}

RingElem euler_char(const RingElem &a, const ChiPreset &chi)
{
    const auto &spec = a.spec();
    std::vector<Term> out;
    for (const auto &t : a.terms()) {
        std::vector<int> key(spec->nilpotents().size());
        for (std::size_t i = 0; i < key.size(); ++i) {
            key[i] = t.mono.exps[i];
        }
        for (std::size_t i = spec->unit_offset(); i < spec->newton_offset(); ++i) {
            if (t.mono.exps[i] != 0) {
                throw invalid_input("Euler characteristic preset does not house unit generator '" +
                                    spec->var_name(i) + "'");
            }
        }
        auto it = chi.values().find(key);
        if (it == chi.values().end()) {
            throw invalid_input("Euler characteristic preset does not house monomial " +
                                monomial_key(*spec, t.mono));
        }
        Monomial residual = t.mono;
        for (std::size_t i = 0; i < key.size(); ++i) {
            residual.exps[i] = 0;
        }
        out.push_back(Term{residual, t.coeff * it->second});
    }
    return RingElem::from_terms(spec, std::move(out));
}

RingElem mukai_pairing(const RingElem &a, const RingElem &b, const ChiPreset &chi)
{
    return euler_char(a * b, chi);
}

RingElem reembed(const RingElem &a, const RingSpecPtr &target)
{
    const auto &source = *a.spec();
    std::vector<std::size_t> map(source.num_vars());
    for (std::size_t i = 0; i < source.num_vars(); ++i) {
        const auto j = target->require(source.var_name(i));
        if (target->kind(j) != source.kind(i) || target->order(j) != source.order(i)) {
            throw spec_mismatch("generator '" + source.var_name(i) + "' differs between rings");
        }
        map[i] = j;
    }
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto &t : a.terms()) {
        Monomial m;
        for (std::size_t i = 0; i < source.num_vars(); ++i) {
            m.exps[map[i]] = t.mono.exps[i];
        }
        out.push_back(Term{m, t.coeff});
    }
    return RingElem::from_terms(target, std::move(out));
}

std::string monomial_key(const RingSpec &spec, const Monomial &m)
{
    std::string key;
    for (std::size_t i = 0; i < spec.num_vars(); ++i) {
        if (m.exps[i] == 0) {
            continue;
        }
        if (!key.empty()) {
            key += '*';
        }
        key += spec.var_name(i);
        if (m.exps[i] != 1) {
            key += '^';
            key += std::to_string(m.exps[i]);
        }
    }
    return key.empty() ? "1" : key;
}

Monomial parse_monomial_key(const RingSpec &spec, std::string_view key)
{
    Monomial m;
    if (key == "1") {
        return m;
    }
    std::size_t pos = 0;
    while (pos <= key.size()) {
        auto star = key.find('*', pos);
        if (star == std::string_view::npos) {
            star = key.size();
        }
        const auto factor = key.substr(pos, star - pos);
        const auto caret = factor.find('^');
        const auto name = factor.substr(0, caret);
        int e = 1;
        if (caret != std::string_view::npos) {
            const std::string exp_text(factor.substr(caret + 1));
            char *end = nullptr;
            const long v = std::strtol(exp_text.c_str(), &end, 10);
            if (exp_text.empty() || *end != '\0') {
                throw invalid_input("bad exponent in monomial '" + std::string(key) + "'");
            }
            e = static_cast<int>(v);
        }
        m.exps[spec.require(name)] += e;
        pos = star + 1;
        if (star == key.size()) {
            break;
        }
    }
    return m;
}

std::string to_string(const RingElem &a)
{
    if (a.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &t : a.terms()) {
        Rational c = t.coeff;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            c = abs(c);
        } else if (c < 0) {
            os << "-";
            c = abs(c);
        }
        first = false;
        if (t.mono.is_one()) {
            os << c.get_str();
        } else {
            if (c != 1) {
                os << c.get_str() << "*";
            }
            os << monomial_key(*a.spec(), t.mono);
        }
    }
    return os.str();
}

} // namespace qkwc
