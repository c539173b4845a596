#include "finf/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace finf {

int BraidWord::writhe() const {
    int w = 0;
    for (int l : letters) w += l > 0 ? 1 : -1;
    return w;
}

std::vector<int> BraidWord::permutation() const {
    std::vector<int> pos(strands);
    std::iota(pos.begin(), pos.end(), 0);
    for (int l : letters) {
        int i = std::abs(l) - 1;
        std::swap(pos[i], pos[i + 1]);
    }
    return pos;
}

bool BraidWord::closure_is_knot() const {
    auto p = permutation();
    int len = 0, x = 0;
    do {
        x = p[x];
        ++len;
    } while (x != 0);
    return len == strands;
}

std::string BraidWord::str() const {
    std::string out;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(letters[i]);
    }
    return out;
}

BraidWord BraidWord::inverse() const {
    BraidWord r{strands, {}};
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

BraidWord BraidWord::mirror() const {
    BraidWord r{strands, letters};
    for (int& l : r.letters) l = -l;
    return r;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    BraidWord r{std::max(a.strands, b.strands), a.letters};
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

BraidWord parse_braid(const std::string& text, int strands) {
    std::string t = text;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    BraidWord w;
    std::string tok;
    int maxi = 0;
    while (in >> tok) {
        char* end = nullptr;
        long v = std::strtol(tok.c_str(), &end, 10);
        if (*end != '\0' || v == 0) throw BraidError("invalid braid letter: " + tok);
        w.letters.push_back(static_cast<int>(v));
        maxi = std::max(maxi, static_cast<int>(std::labs(v)));
    }
    w.strands = strands > 0 ? strands : maxi + 1;
    if (maxi >= w.strands) throw BraidError("letter exceeds strand count");
    return w;
}

BraidWord preset_braid(const std::string& name) {
    if (name == "unknot") return {1, {}};
    if (name == "trefoil") return {2, {1, 1, 1}};
    if (name == "mirror-trefoil") return {2, {-1, -1, -1}};
    if (name == "figure8") return {3, {1, -2, 1, -2}};
    throw BraidError("unknown preset: " + name);
}

bool is_preset(const std::string& name) {
    auto names = preset_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<std::string> preset_names() { return {"unknot", "trefoil", "mirror-trefoil", "figure8"}; }

}  // namespace finf
