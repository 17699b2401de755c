#pragma once

#include <string>
#include <vector>

namespace akfock {

/// One divided power f_i^(m).
struct WordFactor {
    int residue = 0;
    int power = 1;

    friend bool operator==(const WordFactor&, const WordFactor&) = default;
};

/// A product of divided powers f_{i_t}^(m_t) ... f_{i_1}^(m_1). The factor
/// at the back of `factors` acts first.
struct OperatorWord {
    int modulus = 2;
    std::vector<WordFactor> factors;

    friend bool operator==(const OperatorWord&, const OperatorWord&) = default;
};

/// e.g. "f0 f1^(2) f0"; the rightmost factor acts first.
std::string to_string(const OperatorWord& w);

}  // namespace akfock
