#pragma once

#include "gravity/coalgebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace gravity {

// Sign convention, used verbatim by every differential in the project.  Words
// are m[x_1|...|x_s]n with each block carrying a formal desuspension; eps_i =
// sum_{k<i} (|x_k| - 1) counts the markers a split at block i must cross.
//
//   d(m[x_1|...|x_s]n) = -(  sum_{rho(m) = m'ox c}    (-1)^{|m'|+1}           m'[c|x_1|...|x_s]n
//                          + sum_i sum_{D(x_i) = aoxb} (-1)^{|m|+eps_i+|a|}    m[...|a|b|...]n
//                          + sum_{lam(n) = c ox n'}    (-1)^{|m|+eps_{s+1}}    m[x_1|...|x_s|c]n' )
//
// The one-sided differential is the middle sum with |m| = 0.  d^2 = 0 follows
// from coassociativity of the coproduct and of both coactions.

using Blocks = std::vector<int>;  // indices into the C̄ basis

struct WordCoeff {
    Blocks word;
    uint32_t coeff;
};

std::vector<WordCoeff> cobar_differential(const Coalgebra& c, const Blocks& word);

struct TwoSidedWord {
    int left;
    Blocks blocks;
    int right;

    auto operator<=>(const TwoSidedWord&) const = default;
};

struct TwoSidedWordCoeff {
    TwoSidedWord word;
    uint32_t coeff;
};

// m must be a right comodule, n a left comodule.
std::vector<TwoSidedWordCoeff> two_sided_differential(const Comodule& m, const Coalgebra& c,
                                                      const Comodule& n, const TwoSidedWord& word);

std::string format_word(const Coalgebra& c, const Blocks& word);

// All cobar words with s blocks and total internal degree t, for s up to
// max_s + 2, along with the differential matrices (s,t) -> (s+1,t) for s up
// to max_s + 1.  Cells outside the degree box are empty.  An optional weight
// cap drops words whose summed weight tags exceed it; the differential never
// crosses weights, so retained cells stay exact.
class CobarComplex {
public:
    CobarComplex(const Coalgebra& c, int max_s, int max_degree, int max_weight = -1);

    const Coalgebra& coalgebra() const { return *c_; }
    int max_s() const { return max_s_; }
    int max_degree() const { return max_degree_; }

    const std::vector<Blocks>& words(int s, int t) const;
    int word_index(int s, int t, const Blocks& word) const;  // -1 when absent
    const FpMatrix& differential(int s, int t) const;        // zero-sized when empty

    int word_weight(const Blocks& word) const;

private:
    struct Cell {
        std::vector<Blocks> words;
        std::map<Blocks, int> index;
        FpMatrix d;

        Cell(uint32_t p) : d(0, 0, p) {}
    };

    const Cell* cell(int s, int t) const;

    const Coalgebra* c_;
    int max_s_;
    int max_degree_;
    int max_weight_;
    std::map<std::pair<int, int>, Cell> cells_;
    FpMatrix empty_;
    std::vector<Blocks> no_words_;
};

struct DSquaredReport {
    bool ok;
    std::string witness;  // empty when ok
};

DSquaredReport verify_d_squared(const CobarComplex& cx);

struct CotorCell {
    int dim = 0;
    std::vector<std::string> representatives;
};

struct CotorResult {
    uint32_t p;
    int max_s;
    int max_degree;
    bool truncated;
    int complete_degree;
    std::map<std::pair<int, int>, CotorCell> cells;  // (s,t) -> cell, zeros omitted
};

struct CotorOptions {
    bool representatives = false;
};

// dim ker - rank of the incoming differential, per bidegree (-s, t).
CotorResult cotor(const Coalgebra& c, int max_s, int max_degree, const CotorOptions& opts = {});

class TwoSidedComplex {
public:
    TwoSidedComplex(const Comodule& m, const Coalgebra& c, const Comodule& n, int max_s,
                    int max_degree);

    const std::vector<TwoSidedWord>& words(int s, int t) const;
    const FpMatrix& differential(int s, int t) const;
    int max_s() const { return max_s_; }
    int max_degree() const { return max_degree_; }
    std::string format(const TwoSidedWord& word) const;

private:
    struct Cell {
        std::vector<TwoSidedWord> words;
        std::map<TwoSidedWord, int> index;
        FpMatrix d;

        Cell(uint32_t p) : d(0, 0, p) {}
    };

    const Cell* cell(int s, int t) const;

    const Comodule* m_;
    const Coalgebra* c_;
    const Comodule* n_;
    int max_s_;
    int max_degree_;
    std::map<std::pair<int, int>, Cell> cells_;
    FpMatrix empty_;
    std::vector<TwoSidedWord> no_words_;
};

DSquaredReport verify_d_squared(const TwoSidedComplex& cx);

}  // namespace gravity
