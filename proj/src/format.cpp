#include "finf/format.hpp"

#include <map>
#include <sstream>

namespace finf {

namespace {

const char* const kSup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
const char* const kMinus = "−";

std::string power(const std::string& var, int e) {
    if (e == 0) return "";
    return e == 1 ? var : var + superscript(e);
}

// Joins signed pieces: the first keeps a leading minus, later ones become " + " / " − ".
class Joiner {
public:
    void add(bool negative, const std::string& body) {
        if (out_.empty()) out_ = negative ? kMinus + body : body;
        else out_ += (negative ? std::string(" ") + kMinus + " " : std::string(" + ")) + body;
    }
    std::string str() const { return out_.empty() ? "0" : out_; }

private:
    std::string out_;
};

// Absolute value of c as the coefficient of a monomial `mono` (empty means constant).
std::string scaled_monomial(const Int& c, const std::string& mono) {
    const std::string a = c.sign() < 0 ? (-c).str() : c.str();
    if (mono.empty()) return a;
    return a == "1" ? mono : a + mono;
}

}  // namespace

std::string superscript(int e) {
    std::string out = e < 0 ? "⁻" : "";
    for (char ch : std::to_string(e < 0 ? -static_cast<long long>(e) : e)) out += kSup[ch - '0'];
    return out;
}

std::string to_text(const UnivariateLaurent& p, const std::string& var) {
    Joiner j;
    const auto& t = p.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) j.add(it->second.sign() < 0, scaled_monomial(it->second, power(var, it->first)));
    return j.str();
}

std::string to_text(const BivariateLaurent& p) {
    std::map<int, UnivariateLaurent, std::greater<>> by_s;
    for (const auto& [e, c] : p.terms()) by_s[e.s] += UnivariateLaurent::monomial(e.q, c);
    Joiner j;
    for (const auto& [s, poly] : by_s) {
        const std::string sp = power("s", s);
        if (poly.size() == 1) {
            const auto& [eq, c] = poly.terms()[0];
            j.add(c.sign() < 0, scaled_monomial(c, power("q", eq) + sp));
        } else {
            j.add(false, "(" + to_text(poly, "q") + ")" + sp);
        }
    }
    return j.str();
}

std::string to_text(const CyclotomicScalar& c) {
    Joiner j;
    const auto& k = c.coeffs();
    for (size_t i = 0; i < k.size(); ++i)
        if (!k[i].is_zero()) j.add(k[i].sign() < 0, scaled_monomial(k[i], power("ζ", static_cast<int>(i))));
    return j.str();
}

std::string to_text(const CyclotomicLaurent& p) {
    Joiner j;
    const auto& t = p.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const std::string sp = power("s", it->first);
        std::string body = to_text(it->second);
        bool negative = false;
        if (body.find(' ') != std::string::npos) {
            body = "(" + body + ")" + sp;
        } else {
            if (body.rfind(kMinus, 0) == 0) {
                negative = true;
                body = body.substr(std::string(kMinus).size());
            }
            if (body == "1" && !sp.empty()) body = sp;
            else body += sp;
        }
        j.add(negative, body);
    }
    return j.str();
}

nlohmann::ordered_json to_json(const BivariateLaurent& p) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({e.q, e.s, c.str()});
    return out;
}

nlohmann::ordered_json to_json(const UnivariateLaurent& p, bool in_s_slot) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        if (in_s_slot) out.push_back({0, e, c.str()});
        else out.push_back({e, 0, c.str()});
    }
    return out;
}

nlohmann::ordered_json to_json(const CyclotomicLaurent& p) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::ordered_json coeff;
        coeff["order"] = c.order();
        coeff["coeffs"] = nlohmann::ordered_json::array();
        for (const auto& x : c.coeffs()) coeff["coeffs"].push_back(x.str());
        out.push_back({0, e, coeff});
    }
    return out;
}

}  // namespace finf
