#include <heatansatz/grpoly.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace heatansatz
{

char family_letter(Family f)
{
    switch (f) {
    case Family::Y:
        return 'y';
    case Family::X:
        return 'x';
    case Family::D:
        return 'D';
    }
    return '?';
}

Family family_from_letter(std::string_view s)
{
    if (s == "Y" || s == "y") {
        return Family::Y;
    }
    if (s == "X" || s == "x") {
        return Family::X;
    }
    if (s == "D") {
        return Family::D;
    }
    throw std::invalid_argument("unknown variable family '" + std::string(s) + "'");
}

int variable_weight(Family f, unsigned subscript)
{
    const int k = static_cast<int>(subscript);
    return f == Family::D ? 2 * (k + 1) : 2 * k;
}

FamilyMismatch::FamilyMismatch(Family a, Family b)
    : std::invalid_argument(std::string("variable family mismatch: ") + family_letter(a) + " vs " +
                            family_letter(b))
{
}

int monomial_degree(Family f, const Exponents& e)
{
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        d -= static_cast<int>(e[i]) * variable_weight(f, static_cast<unsigned>(i + 1));
    }
    return d;
}

void GradedPoly::trim(Exponents& e)
{
    while (!e.empty() && e.back() == 0) {
        e.pop_back();
    }
}

GradedPoly::GradedPoly(Family family, unsigned nvars) : family_(family), nvars_(nvars) {}

GradedPoly GradedPoly::constant(Family family, unsigned nvars, const Rational& c)
{
    GradedPoly p(family, nvars);
    p.add_term({}, c);
    return p;
}

GradedPoly GradedPoly::variable(Family family, unsigned nvars, unsigned subscript, const Rational& c)
{
    if (subscript == 0) {
        throw std::invalid_argument("variable subscripts start at 1");
    }
    Exponents e(subscript, 0);
    e[subscript - 1] = 1;
    return monomial(family, std::max(nvars, subscript), std::move(e), c);
}

GradedPoly GradedPoly::monomial(Family family, unsigned nvars, Exponents exps, const Rational& c)
{
    GradedPoly p(family, nvars);
    trim(exps);
    if (exps.size() > nvars) {
        throw std::invalid_argument("monomial uses more variables than declared");
    }
    p.add_term(std::move(exps), c);
    return p;
}

void GradedPoly::add_term(Exponents exps, const Rational& c)
{
    if (c == 0) {
        return;
    }
    trim(exps);
    if (exps.size() > nvars_) {
        nvars_ = static_cast<unsigned>(exps.size());
    }
    auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

std::vector<std::pair<Exponents, Rational>> GradedPoly::canonical_terms() const
{
    std::vector<std::pair<Exponents, Rational>> out(terms_.begin(), terms_.end());
    const Family f = family_;
    std::sort(out.begin(), out.end(), [f](const auto& a, const auto& b) {
        const int da = monomial_degree(f, a.first);
        const int db = monomial_degree(f, b.first);
        if (da != db) {
            return da < db;
        }
        const std::size_t n = std::max(a.first.size(), b.first.size());
        for (std::size_t i = n; i-- > 0;) {
            const unsigned ea = i < a.first.size() ? a.first[i] : 0;
            const unsigned eb = i < b.first.size() ? b.first[i] : 0;
            if (ea != eb) {
                return ea > eb;
            }
        }
        return false;
    });
    return out;
}

Rational GradedPoly::coefficient(const Exponents& exps) const
{
    Exponents e = exps;
    trim(e);
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned GradedPoly::max_subscript() const
{
    unsigned m = 0;
    for (const auto& [e, c] : terms_) {
        m = std::max(m, static_cast<unsigned>(e.size()));
    }
    return m;
}

GradedPoly GradedPoly::with_nvars(unsigned nvars) const
{
    if (max_subscript() > nvars) {
        throw std::invalid_argument("cannot shrink variable count below the highest used subscript");
    }
    GradedPoly p = *this;
    p.nvars_ = nvars;
    return p;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& other)
{
    if (family_ != other.family_) {
        throw FamilyMismatch(family_, other.family_);
    }
    nvars_ = std::max(nvars_, other.nvars_);
    for (const auto& [e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& other)
{
    if (family_ != other.family_) {
        throw FamilyMismatch(family_, other.family_);
    }
    nvars_ = std::max(nvars_, other.nvars_);
    for (const auto& [e, c] : other.terms_) {
        add_term(e, -c);
    }
    return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b)
{
    if (a.family_ != b.family_) {
        throw FamilyMismatch(a.family_, b.family_);
    }
    GradedPoly out(a.family_, std::max(a.nvars_, b.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) {
                e[i] += ea[i];
            }
            for (std::size_t i = 0; i < eb.size(); ++i) {
                e[i] += eb[i];
            }
            out.add_term(std::move(e), ca * cb);
        }
    }
    return out;
}

bool operator==(const GradedPoly& a, const GradedPoly& b)
{
    return a.family_ == b.family_ && a.terms_ == b.terms_;
}

GradedPoly poly_add(const GradedPoly& a, const GradedPoly& b) { return a + b; }

GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b) { return a * b; }

GradedPoly poly_pow(const GradedPoly& a, unsigned exp)
{
    GradedPoly result = GradedPoly::constant(a.family(), a.nvars(), Rational(1));
    GradedPoly base = a;
    while (exp > 0) {
        if (exp & 1U) {
            result = result * base;
        }
        exp >>= 1U;
        if (exp > 0) {
            base = base * base;
        }
    }
    return result;
}

GradedPoly poly_partial(const GradedPoly& a, unsigned subscript)
{
    if (subscript == 0 || subscript > a.nvars()) {
        throw std::invalid_argument("partial derivative by y" + std::to_string(subscript) +
                                    " outside the declared " + std::to_string(a.nvars()) + " variables");
    }
    GradedPoly out(a.family(), a.nvars());
    const std::size_t i = subscript - 1;
    for (const auto& [e, c] : a.terms()) {
        if (i >= e.size() || e[i] == 0) {
            continue;
        }
        Exponents d = e;
        const unsigned power = d[i]--;
        out.add_term(std::move(d), c * power);
    }
    return out;
}

Degree poly_degree(const GradedPoly& a)
{
    Degree d;
    for (const auto& [e, c] : a.terms()) {
        const int md = monomial_degree(a.family(), e);
        if (d.kind == Degree::Kind::zero) {
            d = {Degree::Kind::homogeneous, md};
        } else if (d.value != md) {
            return {Degree::Kind::mixed, 0};
        }
    }
    return d;
}

namespace
{

template <typename T>
T eval_impl(const GradedPoly& a, std::span<const T> point)
{
    if (point.size() < a.max_subscript()) {
        throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) +
                                    " entries, polynomial needs " + std::to_string(a.max_subscript()));
    }
    T sum = T(0);
    for (const auto& [e, c] : a.terms()) {
        T term;
        if constexpr (std::is_same_v<T, double>) {
            term = c.get_d();
        } else {
            term = c;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (unsigned p = 0; p < e[i]; ++p) {
                term *= point[i];
            }
        }
        sum += term;
    }
    return sum;
}

} // namespace

Rational poly_eval(const GradedPoly& a, std::span<const Rational> point) { return eval_impl<Rational>(a, point); }

double poly_eval(const GradedPoly& a, std::span<const double> point) { return eval_impl<double>(a, point); }

GradedPoly substitute(const GradedPoly& a, std::span<const GradedPoly> images)
{
    if (images.empty()) {
        if (a.max_subscript() > 0) {
            throw std::invalid_argument("substitution needs an image for every occurring variable");
        }
        return a;
    }
    const Family target = images.front().family();
    unsigned nvars = 0;
    for (const auto& img : images) {
        if (img.family() != target) {
            throw FamilyMismatch(target, img.family());
        }
        nvars = std::max(nvars, img.nvars());
    }
    if (a.max_subscript() > images.size()) {
        throw std::invalid_argument("substitution needs an image for every occurring variable");
    }

    // powers[i][p] = images[i]^p, filled lazily
    std::vector<std::vector<GradedPoly>> powers(images.size());
    auto image_power = [&](std::size_t i, unsigned p) -> const GradedPoly& {
        auto& cache = powers[i];
        if (cache.empty()) {
            cache.push_back(GradedPoly::constant(target, nvars, Rational(1)));
        }
        while (cache.size() <= p) {
            cache.push_back(cache.back() * images[i]);
        }
        return cache[p];
    };

    GradedPoly out(target, nvars);
    for (const auto& [e, c] : a.terms()) {
        GradedPoly term = GradedPoly::constant(target, nvars, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                term = term * image_power(i, e[i]);
            }
        }
        out += term;
    }
    return out;
}

namespace
{

std::string monomial_text(Family f, const Exponents& e)
{
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += '*';
        }
        s += family_letter(f);
        s += std::to_string(i + 1);
        if (e[i] > 1) {
            s += '^';
            s += std::to_string(e[i]);
        }
    }
    return s;
}

} // namespace

std::string to_string(const GradedPoly& a)
{
    if (a.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [e, c] : a.canonical_terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const std::string mono = monomial_text(a.family(), e);
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag);
            out += '*';
            out += mono;
        }
    }
    return out;
}

namespace
{

class PolyParser
{
public:
    PolyParser(Family family, std::string_view text) : family_(family), text_(text) {}

    GradedPoly parse(unsigned nvars)
    {
        GradedPoly out(family_, nvars);
        skip_space();
        if (pos_ == text_.size()) {
            fail("empty polynomial");
        }
        bool first = true;
        while (pos_ < text_.size()) {
            Rational sign(1);
            skip_space();
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') {
                    sign = -1;
                }
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [e, c] = parse_term();
            out.add_term(std::move(e), sign * c);
            skip_space();
        }
        return out.with_nvars(std::max(nvars, out.max_subscript()));
    }

private:
    std::pair<Exponents, Rational> parse_term()
    {
        Exponents e;
        Rational c(1);
        bool any = false;
        for (;;) {
            skip_space();
            const char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
                c *= parse_number();
            } else if (ch == family_letter(family_)) {
                ++pos_;
                const unsigned sub = parse_uint();
                if (sub == 0) {
                    fail("variable subscripts start at 1");
                }
                unsigned exp = 1;
                skip_space();
                if (peek() == '^') {
                    ++pos_;
                    skip_space();
                    exp = parse_uint();
                }
                if (e.size() < sub) {
                    e.resize(sub, 0);
                }
                e[sub - 1] += exp;
            } else {
                fail(any ? "expected a factor after '*'" : "expected a coefficient or variable");
            }
            any = true;
            skip_space();
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        return {std::move(e), c};
    }

    Rational parse_number()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' || text_[pos_] == '/')) {
            ++pos_;
        }
        return parse_rational(text_.substr(start, pos_ - start));
    }

    unsigned parse_uint()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an integer");
        }
        return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("cannot parse polynomial '" + std::string(text_) + "' at offset " +
                                    std::to_string(pos_) + ": " + what);
    }

    Family family_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

GradedPoly parse_poly(Family family, std::string_view text, unsigned nvars)
{
    return PolyParser(family, text).parse(nvars);
}

std::string to_json(const GradedPoly& a)
{
    nlohmann::ordered_json j;
    j["family"] = std::string(1, static_cast<char>(std::toupper(family_letter(a.family()))));
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : a.canonical_terms()) {
        Exponents full = e;
        full.resize(a.nvars(), 0);
        nlohmann::ordered_json t;
        t["exp"] = full;
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

GradedPoly from_json(std::string_view json)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed polynomial JSON: ") + ex.what());
    }
    try {
        const Family f = family_from_letter(j.at("family").get<std::string>());
        unsigned nvars = 0;
        GradedPoly out(f, 0);
        for (const auto& t : j.at("terms")) {
            Exponents e = t.at("exp").get<Exponents>();
            nvars = std::max(nvars, static_cast<unsigned>(e.size()));
            const mpz_class num(t.at("num").get<std::string>(), 10);
            const mpz_class den(t.at("den").get<std::string>(), 10);
            if (den <= 0) {
                throw std::invalid_argument("non-positive denominator in polynomial JSON");
            }
            Rational c(num, den);
            c.canonicalize();
            out.add_term(std::move(e), c);
        }
        return out.with_nvars(nvars);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed polynomial JSON: ") + ex.what());
    }
}

} // namespace heatansatz
