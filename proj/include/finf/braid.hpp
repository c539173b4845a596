#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace finf {

// Braid word on `strands` strands; letter +i is sigma_i, -i its inverse (1-based).
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    int writhe() const;
    // Permutation of strand positions induced by the word.
    std::vector<int> permutation() const;
    bool closure_is_knot() const;
    std::string str() const;

    BraidWord inverse() const;
    BraidWord mirror() const;
    friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

class BraidError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parses "1 -2 1" (spaces or commas). Strand count defaults to max |letter| + 1.
BraidWord parse_braid(const std::string& text, int strands = 0);
// unknot, trefoil, mirror-trefoil, figure8.
BraidWord preset_braid(const std::string& name);
bool is_preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace finf
