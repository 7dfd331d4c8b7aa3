#include "segvis/rational.hpp"

#include <cctype>

namespace segvis {

namespace {

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    if (text.empty()) throw ParseError("empty coordinate token");
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den))
            throw ParseError("bad rational token '" + std::string(text) + "'");
        BigInt p(std::string(num));
        BigInt q(std::string(den));
        if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rat(p, q);
    }
    auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        bool neg = !whole.empty() && whole[0] == '-';
        if (!whole.empty() && (whole[0] == '+' || whole[0] == '-')) whole.remove_prefix(1);
        if (whole.empty() && frac.empty()) throw ParseError("bad decimal token '" + std::string(text) + "'");
        for (char c : whole)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad decimal token '" + std::string(text) + "'");
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad decimal token '" + std::string(text) + "'");
        BigInt p = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
        BigInt q(1);
        for (char c : frac) {
            p = p * 10 + (c - '0');
            q *= 10;
        }
        Rat r(p, q);
        return neg ? Rat(-r) : r;
    }
    if (!is_integer_token(text)) throw ParseError("bad coordinate token '" + std::string(text) + "'");
    return Rat(BigInt(std::string(text)));
}

std::string rat_to_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace segvis
