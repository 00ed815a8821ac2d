#include "appnorm/extvalue.hpp"

#include <cctype>

namespace appnorm {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::optional<std::int64_t> parse_int(const std::string& s) {
    std::string body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    if (!all_digits(body) || body.size() > 18) return std::nullopt;
    std::int64_t v = 0;
    for (char c : body) v = v * 10 + (c - '0');
    return neg ? -v : v;
}

}  // namespace

std::optional<rational> rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        auto n = parse_int(text.substr(0, slash));
        auto d = parse_int(text.substr(slash + 1));
        if (!n || !d || *d == 0) return std::nullopt;
        return rational(*n, *d);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string ip = text.substr(0, dot), fp = text.substr(dot + 1);
        if (fp.empty() || !all_digits(fp) || fp.size() > 17) return std::nullopt;
        auto n = parse_int(ip.empty() || ip == "-" || ip == "+" ? ip + "0" : ip);
        if (!n) return std::nullopt;
        std::int64_t den = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
        auto frac = parse_int(fp);
        if (!frac) return std::nullopt;
        bool neg = !text.empty() && text[0] == '-';
        rational whole(*n);
        rational part(*frac, den);
        return neg ? whole - part : whole + part;
    }
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return rational(*n);
}

std::optional<extvalue> extvalue::parse(const std::string& text) {
    if (text == "inf" || text == "INF" || text == "Inf") return extvalue::infinity();
    auto r = rational::parse(text);
    if (!r || r->is_negative()) return std::nullopt;
    return extvalue(*r);
}

}  // namespace appnorm
