#include "higgsdt/laurent.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace higgsdt {

// ---------------------------------------------------------------- tables

VariableTable::VariableTable(std::vector<std::string> names) : names_(std::move(names))
{
    if (names_.size() > kMaxVariables) {
        throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVariables) + ")");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) {
            throw std::invalid_argument("empty variable name");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[i] == names_[j]) {
                throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
            }
        }
    }
}

std::optional<std::size_t> VariableTable::find(std::string_view name) const noexcept
{
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t VariableTable::index(std::string_view name) const
{
    if (auto i = find(name)) {
        return *i;
    }
    throw std::out_of_range("unknown variable '" + std::string(name) + "'");
}

VarTable standard_table(int genus, int z_count)
{
    if (genus < 0 || z_count < 0) {
        throw std::invalid_argument("standard_table: negative size");
    }
    static std::mutex mutex;
    static std::map<std::pair<int, int>, VarTable> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{genus, z_count}];
    if (!slot) {
        std::vector<std::string> names{"q", "t"};
        for (int i = 1; i <= genus; ++i) {
            names.push_back("a" + std::to_string(i));
        }
        for (int j = 1; j <= z_count; ++j) {
            names.push_back("z" + std::to_string(j));
        }
        slot = std::make_shared<const VariableTable>(std::move(names));
    }
    return slot;
}

int table_genus(const VariableTable& table)
{
    int g = 0;
    while (table.find("a" + std::to_string(g + 1))) {
        ++g;
    }
    return g;
}

bool same_table(const VarTable& a, const VarTable& b) noexcept
{
    return a == b || (a && b && *a == *b);
}

namespace {

void require_same(const VarTable& a, const VarTable& b)
{
    if (!same_table(a, b)) {
        throw std::invalid_argument("variable table mismatch");
    }
}

} // namespace

// -------------------------------------------------------------- monomials

bool Monomial::is_one() const noexcept
{
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

int Monomial::leading_sign() const noexcept
{
    for (Exponent e : exps_) {
        if (e != 0) {
            return e > 0 ? 1 : -1;
        }
    }
    return 0;
}

Monomial::Exponent Monomial::content() const noexcept
{
    Exponent g = 0;
    for (Exponent e : exps_) {
        g = std::gcd(g, e);
    }
    return g;
}

std::size_t Monomial::hash() const noexcept
{
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (Exponent e : exps_) {
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(e)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

MonomialMap MonomialMap::identity(VarTable table)
{
    MonomialMap map{table, {}};
    for (std::size_t i = 0; i < table->size(); ++i) {
        map.images.push_back(Monomial::variable(i));
    }
    return map;
}

Monomial MonomialMap::apply(const Monomial& m) const noexcept
{
    Monomial out;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (m[i] != 0) {
            out *= images[i].pow(m[i]);
        }
    }
    return out;
}

// ------------------------------------------------------------ polynomials

LaurentPoly::LaurentPoly(VarTable vars) : vars_(std::move(vars))
{
    if (!vars_) {
        throw std::invalid_argument("LaurentPoly requires a variable table");
    }
}

LaurentPoly::LaurentPoly(VarTable vars, std::vector<Term> terms) : LaurentPoly(std::move(vars))
{
    terms_ = std::move(terms);
    canonicalize();
}

void LaurentPoly::canonicalize()
{
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().first == t.first) {
            merged.back().second += t.second;
        } else {
            if (!merged.empty() && merged.back().second == 0) {
                merged.pop_back();
            }
            merged.push_back(std::move(t));
        }
    }
    if (!merged.empty() && merged.back().second == 0) {
        merged.pop_back();
    }
    terms_ = std::move(merged);
}

LaurentPoly LaurentPoly::constant(VarTable vars, const Rational& c)
{
    return monomial(std::move(vars), Monomial{}, c);
}

LaurentPoly LaurentPoly::monomial(VarTable vars, const Monomial& m, const Rational& c)
{
    LaurentPoly p(std::move(vars));
    if (c != 0) {
        p.terms_.emplace_back(m, c);
    }
    return p;
}

LaurentPoly LaurentPoly::variable(VarTable vars, std::string_view name, Monomial::Exponent e)
{
    const std::size_t i = vars->index(name);
    return monomial(std::move(vars), Monomial::variable(i, e));
}

bool LaurentPoly::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

bool LaurentPoly::has_integer_coefficients() const noexcept
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.second.get_den() == 1; });
}

Rational LaurentPoly::coefficient(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) {
        return it->second;
    }
    return 0;
}

Monomial::Exponent LaurentPoly::min_exponent(std::size_t var) const
{
    if (terms_.empty()) {
        throw std::domain_error("min_exponent of the zero polynomial");
    }
    Monomial::Exponent e = terms_.front().first[var];
    for (const auto& t : terms_) {
        e = std::min(e, t.first[var]);
    }
    return e;
}

Monomial::Exponent LaurentPoly::max_exponent(std::size_t var) const
{
    if (terms_.empty()) {
        throw std::domain_error("max_exponent of the zero polynomial");
    }
    Monomial::Exponent e = terms_.front().first[var];
    for (const auto& t : terms_) {
        e = std::max(e, t.first[var]);
    }
    return e;
}

namespace {

std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b, bool subtract)
{
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            out.emplace_back(j->first, subtract ? Rational(-j->second) : j->second);
            ++j;
        } else {
            Rational c = subtract ? Rational(i->second - j->second) : Rational(i->second + j->second);
            if (c != 0) {
                out.emplace_back(i->first, std::move(c));
            }
            ++i;
            ++j;
        }
    }
    return out;
}

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

std::vector<LaurentPoly::Term> drain(Accumulator& acc)
{
    std::vector<LaurentPoly::Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (c != 0) {
            out.emplace_back(m, std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

} // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    require_same(vars_, o.vars_);
    if (o.terms_.empty()) {
        return *this;
    }
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    require_same(vars_, o.vars_);
    if (o.terms_.empty()) {
        return *this;
    }
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
        t.second = -t.second;
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) {
        t.second *= c;
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Monomial& m)
{
    // Translation preserves the lexicographic order.
    for (auto& t : terms_) {
        t.first *= m;
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    *this = *this * o;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    require_same(a.vars_, b.vars_);
    if (a.is_zero() || b.is_zero()) {
        return LaurentPoly(a.vars_);
    }
    if (a.size() == 1 || b.size() == 1) {
        const LaurentPoly& mono = a.size() == 1 ? a : b;
        LaurentPoly r = a.size() == 1 ? b : a;
        r *= mono.terms_.front().first;
        r *= mono.terms_.front().second;
        return r;
    }
    return LaurentPoly::multiply_truncated(a, b, 0, std::numeric_limits<Monomial::Exponent>::max());
}

LaurentPoly LaurentPoly::multiply_truncated(const LaurentPoly& a, const LaurentPoly& b, std::size_t var,
                                            Monomial::Exponent max_degree)
{
    require_same(a.vars_, b.vars_);
    LaurentPoly r(a.vars_);
    if (a.is_zero() || b.is_zero()) {
        return r;
    }
    const LaurentPoly& big = a.size() >= b.size() ? a : b;
    const LaurentPoly& small = a.size() >= b.size() ? b : a;
    Accumulator acc;
    acc.reserve(std::min<std::size_t>(big.size() * small.size(), big.size() * 8 + 64));
    mpq_t prod;
    mpq_init(prod);
    for (const auto& [ms, cs] : small.terms_) {
        for (const auto& [mb, cb] : big.terms_) {
            if (static_cast<long>(ms[var]) + mb[var] > max_degree) {
                continue;
            }
            mpq_mul(prod, cs.get_mpq_t(), cb.get_mpq_t());
            Rational& slot = acc[ms * mb];
            mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), prod);
        }
    }
    mpq_clear(prod);
    r.terms_ = drain(acc);
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b)
{
    return same_table(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::adams(int n) const
{
    if (n < 1) {
        throw std::invalid_argument("adams: n must be positive");
    }
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
        t.first = t.first.pow(n);
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(const MonomialMap& map) const
{
    if (map.images.size() != vars_->size()) {
        throw std::invalid_argument("substitute: map arity does not match the variable table");
    }
    Accumulator acc;
    acc.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        acc[map.apply(m)] += c;
    }
    LaurentPoly r(map.target);
    r.terms_ = drain(acc);
    return r;
}

LaurentPoly LaurentPoly::slice(std::size_t var, Monomial::Exponent e) const
{
    LaurentPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == e) {
            Monomial k = m;
            k.set(var, 0);
            r.terms_.emplace_back(k, c);
        }
    }
    r.canonicalize();
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const
{
    LaurentPoly result = constant(vars_, 1);
    LaurentPoly base = *this;
    while (n) {
        if (n & 1u) {
            result *= base;
        }
        n >>= 1;
        if (n) {
            base *= base;
        }
    }
    return result;
}

Rational LaurentPoly::evaluate(std::span<const Rational> point) const
{
    if (point.size() < vars_->size()) {
        throw std::invalid_argument("evaluate: point has too few coordinates");
    }
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            const auto e = m[i];
            if (e == 0) {
                continue;
            }
            if (point[i] == 0) {
                if (e < 0) {
                    throw std::domain_error("evaluate: zero raised to a negative power");
                }
                v = 0;
                break;
            }
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), point[i].get_num_mpz_t(), static_cast<unsigned long>(std::abs(e)));
            mpz_pow_ui(den.get_mpz_t(), point[i].get_den_mpz_t(), static_cast<unsigned long>(std::abs(e)));
            Rational f = e > 0 ? Rational(num, den) : Rational(den, num);
            f.canonicalize();
            v *= f;
        }
        sum += v;
    }
    return sum;
}

std::complex<long double> LaurentPoly::evaluate(std::span<const std::complex<long double>> point) const
{
    if (point.size() < vars_->size()) {
        throw std::invalid_argument("evaluate: point has too few coordinates");
    }
    std::complex<long double> sum = 0;
    for (const auto& [m, c] : terms_) {
        std::complex<long double> v = static_cast<long double>(c.get_d());
        if (c.get_den() != 1 || abs(c.get_num()) > mpz_class(1) << 52) {
            v = std::stold(c.get_num().get_str()) / std::stold(c.get_den().get_str());
        }
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            const auto e = m[i];
            if (e != 0) {
                v *= std::pow(point[i], static_cast<long double>(e));
            }
        }
        sum += v;
    }
    return sum;
}

// --------------------------------------------------------------- binomials

BinomialFactor::BinomialFactor(const Monomial& a, const Monomial& b)
{
    if (a == b) {
        throw std::invalid_argument("binomial factor with equal monomials is zero");
    }
    if (a > b) {
        lead_ = a;
        trail_ = b;
        sign_ = 1;
    } else {
        lead_ = b;
        trail_ = a;
        sign_ = -1;
    }
}

LaurentPoly BinomialFactor::expand(const VarTable& vars) const
{
    return LaurentPoly(vars, {{lead_, Rational(1)}, {trail_, Rational(-1)}});
}

namespace {

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

} // namespace

std::optional<LaurentPoly> try_divide_along(const LaurentPoly& p, const Monomial& x,
                                            std::span<const Rational> coeffs)
{
    if (x.leading_sign() <= 0) {
        throw std::invalid_argument("try_divide_along: direction must have positive leading exponent");
    }
    if (coeffs.empty() || coeffs.front() == 0 || coeffs.back() == 0) {
        throw std::invalid_argument("try_divide_along: divisor needs nonzero end coefficients");
    }
    const long degree = static_cast<long>(coeffs.size()) - 1;
    if (p.is_zero()) {
        return p;
    }
    if (degree == 0) {
        LaurentPoly r = p;
        r *= Rational(1 / coeffs.front());
        return r;
    }
    std::size_t pivot = 0;
    while (x[pivot] == 0) {
        ++pivot;
    }
    const long step = x[pivot];

    // Cosets of the subgroup generated by x, each holding its chain positions.
    std::unordered_map<Monomial, std::vector<std::pair<long, const Rational*>>, MonomialHash> chains;
    for (const auto& [m, c] : p.terms()) {
        const long k = floor_div(m[pivot], step);
        chains[m / x.pow(static_cast<Monomial::Exponent>(k))].emplace_back(k, &c);
    }

    const Rational inv_lead = 1 / coeffs.front();
    std::vector<LaurentPoly::Term> out;
    std::vector<Rational> dense;
    std::vector<Rational> quot;
    Rational acc;
    for (auto& [key, entries] : chains) {
        long lo = entries.front().first;
        long hi = lo;
        for (const auto& e : entries) {
            lo = std::min(lo, e.first);
            hi = std::max(hi, e.first);
        }
        if (hi - lo < degree) {
            return std::nullopt;
        }
        dense.assign(static_cast<std::size_t>(hi - lo + 1), Rational(0));
        for (const auto& [k, c] : entries) {
            dense[static_cast<std::size_t>(k - lo)] = *c;
        }
        const long qlen = hi - lo - degree + 1;
        quot.assign(static_cast<std::size_t>(qlen), Rational(0));
        for (long k = 0; k < qlen; ++k) {
            acc = dense[static_cast<std::size_t>(k)];
            for (long j = 1; j <= std::min(degree, k); ++j) {
                acc -= coeffs[static_cast<std::size_t>(j)] * quot[static_cast<std::size_t>(k - j)];
            }
            quot[static_cast<std::size_t>(k)] = acc * inv_lead;
        }
        for (long k = qlen; k <= hi - lo; ++k) {
            acc = dense[static_cast<std::size_t>(k)];
            for (long j = k - qlen + 1; j <= std::min(degree, k); ++j) {
                acc -= coeffs[static_cast<std::size_t>(j)] * quot[static_cast<std::size_t>(k - j)];
            }
            if (acc != 0) {
                return std::nullopt;
            }
        }
        for (long k = 0; k < qlen; ++k) {
            if (quot[static_cast<std::size_t>(k)] != 0) {
                out.emplace_back(key * x.pow(static_cast<Monomial::Exponent>(lo + k)),
                                 std::move(quot[static_cast<std::size_t>(k)]));
            }
        }
    }
    return LaurentPoly(p.vars(), std::move(out));
}

LaurentPoly exact_divide(const LaurentPoly& p, const BinomialFactor& f)
{
    // lead - trail = lead * (1 - x) with x = trail / lead, and x < 1 in the order.
    const Monomial x = f.trailing() / f.leading();
    LaurentPoly shifted = p * f.leading().inverse();
    std::optional<LaurentPoly> q;
    if (x.leading_sign() > 0) {
        const Rational c[2] = {1, -1};
        q = try_divide_along(shifted, x, c);
    } else {
        // 1 - x = -x (1 - x^-1)
        const Rational c[2] = {-1, 1};
        q = try_divide_along(shifted * x.inverse(), x.inverse(), c);
    }
    if (!q) {
        throw NotDivisible("polynomial is not divisible by the binomial factor");
    }
    return *q;
}

} // namespace higgsdt
