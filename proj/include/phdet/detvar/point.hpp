#pragma once

#include "phdet/error.hpp"
#include "phdet/polyalg/rational.hpp"

#include <cctype>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace phdet {

/// A rational point, either affine "(a,b,...)" or projective "[a:b:...]".
/// Projective points are normalized to coprime integers whose first nonzero
/// entry is positive, so equal points compare equal.
class Point {
public:
    Point() = default;

    static Point affine(std::vector<Rational> coords) { return Point(false, std::move(coords)); }

    static Point projective(std::vector<Rational> coords) {
        Point p(true, std::move(coords));
        p.normalize();
        return p;
    }

    static Point coordinate(std::size_t nvars, std::size_t index) {
        std::vector<Rational> c(nvars, 0);
        c.at(index) = 1;
        return projective(std::move(c));
    }

    bool is_projective() const noexcept { return projective_; }
    std::size_t size() const noexcept { return coords_.size(); }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    /// Index of the single nonzero coordinate when this is a coordinate point.
    std::optional<std::size_t> coordinate_index() const {
        std::optional<std::size_t> idx;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] == 0) continue;
            if (idx) return std::nullopt;
            idx = i;
        }
        return idx;
    }

    std::optional<std::size_t> first_nonzero() const {
        for (std::size_t i = 0; i < coords_.size(); ++i)
            if (coords_[i] != 0) return i;
        return std::nullopt;
    }

    std::string to_string() const {
        std::string out(1, projective_ ? '[' : '(');
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i != 0) out += projective_ ? ":" : ",";
            out += phdet::to_string(coords_[i]);
        }
        out += projective_ ? ']' : ')';
        return out;
    }

    /// Parses "[a:b:c]" (integer entries) or "(a,b,c)" (rational entries).
    static Point parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s.size() < 2) throw std::invalid_argument("malformed point '" + std::string(text) + "'");
        bool proj = s.front() == '[' && s.back() == ']';
        bool aff = s.front() == '(' && s.back() == ')';
        if (!proj && !aff) throw std::invalid_argument("malformed point '" + std::string(text) + "'");
        const char sep = proj ? ':' : ',';
        std::vector<Rational> coords;
        std::string body = s.substr(1, s.size() - 2);
        std::size_t start = 0;
        for (;;) {
            std::size_t end = body.find(sep, start);
            std::string item = body.substr(start, end == std::string::npos ? std::string::npos : end - start);
            coords.push_back(parse_number(item, proj, text));
            if (end == std::string::npos) break;
            start = end + 1;
        }
        if (proj) {
            bool all_zero = true;
            for (const auto& c : coords) all_zero = all_zero && c == 0;
            if (all_zero) throw std::invalid_argument("projective point cannot be all zero");
            return projective(std::move(coords));
        }
        return affine(std::move(coords));
    }

    friend bool operator==(const Point&, const Point&) = default;
    friend std::weak_ordering operator<=>(const Point& a, const Point& b) {
        if (a.projective_ != b.projective_) return a.projective_ <=> b.projective_;
        return a.coords_ <=> b.coords_;
    }

private:
    Point(bool projective, std::vector<Rational> coords) : projective_(projective), coords_(std::move(coords)) {}

    static Rational parse_number(const std::string& item, bool integer_only, std::string_view whole) {
        auto bad = [&] { return std::invalid_argument("malformed coordinate '" + item + "' in point '" + std::string(whole) + "'"); };
        if (item.empty()) throw bad();
        std::size_t slash = item.find('/');
        if (slash != std::string::npos && integer_only) throw bad();
        auto parse_int = [&](const std::string& s, bool allow_sign) {
            std::size_t i = 0;
            if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
            if (i == s.size()) throw bad();
            for (std::size_t k = i; k < s.size(); ++k)
                if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw bad();
            return Integer(s[0] == '+' ? s.substr(1) : s);
        };
        if (slash == std::string::npos) return Rational(parse_int(item, true));
        Integer den = parse_int(item.substr(slash + 1), false);
        if (den == 0) throw bad();
        return Rational(parse_int(item.substr(0, slash), true), den);
    }

    void normalize() {
        Integer den_lcm = 1;
        for (const auto& c : coords_) den_lcm = boost::multiprecision::lcm(den_lcm, denominator_of(c));
        Integer g = 0;
        for (const auto& c : coords_) g = boost::multiprecision::gcd(g, numerator_of(c * den_lcm));
        if (g == 0) return;
        auto lead = first_nonzero();
        if (coords_[*lead] < 0) g = -g;
        for (auto& c : coords_) c = Rational(numerator_of(c * den_lcm) / g);
    }

    bool projective_ = false;
    std::vector<Rational> coords_;
};

}  // namespace phdet
