#include "hilb3/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "hilb3/error.hpp"

namespace hilb3::io {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return parts;
}

int parse_int(std::string_view token)
{
    token = trim(token);
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last)
        throw error("invalid integer '" + std::string(token) + "'");
    return value;
}

// x^a y^b z^c written as "x^2*y", "x^2y" or "1".
Exponent parse_monomial3(std::string_view token)
{
    std::string_view t = trim(token);
    if (t == "1")
        return {0, 0, 0};
    Exponent e{0, 0, 0};
    std::size_t i = 0;
    if (t.empty())
        throw error("empty monomial in ideal");
    while (i < t.size()) {
        char c = t[i];
        if (c == '*' || std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int axis = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : -1;
        if (axis < 0)
            throw error("invalid monomial '" + std::string(t) + "': unexpected '" + std::string(1, c) + "'");
        ++i;
        int power = 1;
        if (i < t.size() && t[i] == '^') {
            std::size_t j = ++i;
            while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j])))
                ++j;
            if (j == i)
                throw error("invalid monomial '" + std::string(t) + "': missing exponent");
            power = parse_int(t.substr(i, j - i));
            i = j;
        }
        e[axis] += power;
    }
    return e;
}

// Recursive-descent parser over a single polynomial string.
class PolynomialParser {
public:
    PolynomialParser(std::string_view text, const std::vector<int>& weights)
        : text_(text), poly_(weights.size(), weights)
    {}

    QuasiHomogPoly parse()
    {
        skip_space();
        if (at_end())
            throw error("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail();
            }
            term(sign);
            first = false;
            skip_space();
        }
        return poly_;
    }

private:
    void term(int sign)
    {
        mpq_class coeff = sign;
        QuasiHomogPoly::Monomial exps(poly_.num_vars(), 0);
        factor(coeff, exps);
        skip_space();
        while (!at_end() && peek() == '*') {
            ++pos_;
            factor(coeff, exps);
            skip_space();
        }
        poly_.add_term(exps, coeff);
    }

    void factor(mpq_class& coeff, QuasiHomogPoly::Monomial& exps)
    {
        skip_space();
        if (at_end())
            throw error("polynomial ends unexpectedly");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num(digits());
            mpz_class den = 1;
            skip_space();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_space();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                    fail();
                den = mpz_class(digits());
                if (den == 0)
                    throw error("division by zero in coefficient");
            }
            mpq_class q(num, den);
            q.canonicalize();
            coeff *= q;
            return;
        }
        std::size_t start = pos_;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek())))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (name.empty())
            fail();
        std::size_t var = variable_index(name);
        int power = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_space();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail();
            power = parse_int(digits());
        }
        exps[var] += power;
    }

    std::size_t variable_index(const std::string& name) const
    {
        const std::size_t n = poly_.num_vars();
        if (n <= 3 && name.size() == 1 && (name[0] == 'x' || name[0] == 'y' || name[0] == 'z')) {
            std::size_t idx = static_cast<std::size_t>(name[0] - 'x');
            if (idx < n)
                return idx;
        }
        if (name.size() >= 2 && name[0] == 'x' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
            std::size_t idx = std::stoul(name.substr(1));
            if (idx >= 1 && idx <= n)
                return idx - 1;
        }
        throw error("unknown variable '" + name + "' for " + std::to_string(n) + " variable(s)");
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail() const
    {
        throw error("unexpected token '" + std::string(1, text_[pos_]) + "' at position " + std::to_string(pos_));
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
    QuasiHomogPoly poly_;
};

std::string monomial_text(const QuasiHomogPoly::Monomial& e)
{
    const bool short_names = e.size() <= 3;
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += short_names ? std::string(1, static_cast<char>('x' + i)) : "x" + std::to_string(i + 1);
        if (e[i] > 1)
            out += "^" + std::to_string(e[i]);
    }
    return out;
}

} // namespace

MonomialIdeal parse_ideal(std::string_view text)
{
    std::vector<Exponent> gens;
    for (auto token : split(trim(text), ';')) {
        token = trim(token);
        if (token.empty())
            throw error("empty generator in ideal '" + std::string(text) + "'");
        if (token.find(',') != std::string_view::npos) {
            auto parts = split(token, ',');
            if (parts.size() != 3)
                throw error("generator '" + std::string(token) + "' must have three exponents");
            Exponent e;
            for (int k = 0; k < 3; ++k)
                e[k] = parse_int(parts[k]);
            if (e[0] < 0 || e[1] < 0 || e[2] < 0)
                throw error("generator '" + std::string(token) + "' has a negative exponent");
            gens.push_back(e);
        } else {
            gens.push_back(parse_monomial3(token));
        }
    }
    return MonomialIdeal::from_generators(std::move(gens));
}

std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> out;
    for (auto token : split(trim(text), ','))
        out.push_back(parse_int(token));
    return out;
}

QuasiHomogPoly parse_polynomial(std::string_view text, const std::vector<int>& weights)
{
    return PolynomialParser(text, weights).parse();
}

std::string format_ideal(const MonomialIdeal& ideal)
{
    std::string out;
    for (const auto& g : ideal.generators()) {
        if (!out.empty())
            out += ';';
        out += std::to_string(g[0]) + "," + std::to_string(g[1]) + "," + std::to_string(g[2]);
    }
    return out;
}

std::string format_polynomial(const QuasiHomogPoly& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        mpq_class mag = abs(c);
        std::string mono = monomial_text(e);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

json generators_json(const MonomialIdeal& ideal)
{
    json gens = json::array();
    for (const auto& g : ideal.generators())
        gens.push_back({g[0], g[1], g[2]});
    return gens;
}

json partition_json(const PlanePartition& pp)
{
    json rec;
    rec["n"] = pp.size();
    rec["generators"] = generators_json(to_ideal(pp));
    rec["heights"] = pp.heights();
    return rec;
}

json tangent_json(const TangentReport& report)
{
    json rec;
    rec["n"] = report.ideal.colength();
    rec["generators"] = generators_json(report.ideal);
    rec["dim"] = report.dim;
    json weights = json::array();
    for (const auto& [w, mult] : report.character.entries())
        weights.push_back({w.w1, w.w2, w.w3, mult});
    rec["weights"] = std::move(weights);
    rec["parity_ok"] = report.parity_ok;
    rec["cone_ok"] = report.cone_ok;
    rec["diagonal_free"] = report.diagonal_free;
    return rec;
}

json localization_json(const LocalizationResult& result, bool per_point)
{
    json rec;
    rec["n"] = result.n;
    rec["weighted_euler"] = result.weighted_euler;
    rec["fixed_point_count"] = result.fixed_point_count;
    if (per_point) {
        json points = json::array();
        for (const auto& p : result.per_point) {
            json entry;
            entry["generators"] = generators_json(p.ideal);
            entry["sign"] = p.sign;
            points.push_back(std::move(entry));
        }
        rec["per_point"] = std::move(points);
    }
    return rec;
}

std::string format_series(const IntSeries& s, std::string_view kind, long chi, SeriesFormat format)
{
    std::ostringstream out;
    const auto& c = s.coefficients();
    switch (format) {
    case SeriesFormat::json:
        // Hand-written so that coefficients stay exact beyond 64 bits.
        out << "{\"kind\":" << json(std::string(kind)).dump() << ",\"chi\":" << chi << ",\"order\":" << s.order()
            << ",\"coefficients\":[";
        for (std::size_t n = 0; n < c.size(); ++n)
            out << (n ? "," : "") << c[n].get_str();
        out << "]}\n";
        break;
    case SeriesFormat::csv:
        out << "n,coefficient\n";
        for (std::size_t n = 0; n < c.size(); ++n)
            out << n << ',' << c[n].get_str() << '\n';
        break;
    case SeriesFormat::text:
        for (std::size_t n = 0; n < c.size(); ++n)
            out << (n ? "," : "") << c[n].get_str();
        out << '\n';
        break;
    }
    return out.str();
}

} // namespace hilb3::io
