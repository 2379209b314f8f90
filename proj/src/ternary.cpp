#include "ternary.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgt {

namespace {

void check_symbol(Symbol s) {
    if (s > 2) throw std::invalid_argument("symbol out of range");
}

void check_defectives(const Matrix& code, const std::vector<int>& defectives) {
    if (defectives.empty()) throw std::invalid_argument("defective set is empty");
    for (int j : defectives)
        if (j < 0 || j >= code.N) throw std::invalid_argument("defective index out of range");
    std::vector<int> d = defectives;
    std::sort(d.begin(), d.end());
    if (std::adjacent_find(d.begin(), d.end()) != d.end())
        throw std::invalid_argument("defective index repeated");
}

} // namespace

Symbol tern_add(Symbol a, Symbol b) {
    check_symbol(a);
    check_symbol(b);
    if (a == 0 && b == 0) return 0;
    if (a == 1 && b == 1) return 1;
    return 2;
}

Word word_sum(const std::vector<Word>& words) {
    if (words.empty()) throw std::invalid_argument("word_sum of empty collection");
    Word acc = words.front();
    for (Symbol s : acc) check_symbol(s);
    for (std::size_t i = 1; i < words.size(); ++i) {
        const Word& w = words[i];
        if (w.size() != acc.size()) throw std::invalid_argument("word lengths differ");
        for (std::size_t t = 0; t < acc.size(); ++t) acc[t] = tern_add(acc[t], w[t]);
    }
    return acc;
}

bool is_included(const Word& y, const Word& x) {
    if (y.size() != x.size()) throw std::invalid_argument("word lengths differ");
    for (std::size_t t = 0; t < x.size(); ++t)
        if (tern_add(x[t], y[t]) != x[t]) return false;
    return true;
}

Word parse_word(const std::string& text) {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '2') throw std::invalid_argument("word character not in 0/1/2");
        w.push_back(static_cast<Symbol>(c - '0'));
    }
    return w;
}

std::string format_word(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Symbol v : w) {
        check_symbol(v);
        s.push_back(static_cast<char>('0' + v));
    }
    return s;
}

Word Matrix::column(int j) const {
    if (j < 0 || j >= N) throw std::invalid_argument("column index out of range");
    Word w(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) w[t] = at(t, j);
    return w;
}

Matrix make_matrix(int n, int N) {
    if (n < 1 || N < 1) throw std::invalid_argument("matrix dimensions must be positive");
    Matrix m;
    m.n = n;
    m.N = N;
    m.a.assign(static_cast<std::size_t>(n) * N, 0);
    return m;
}

Matrix load_matrix(const std::string& text) {
    std::vector<std::string> rows;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            rows.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) rows.push_back(cur);
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    if (rows.empty()) throw std::invalid_argument("matrix text is empty");
    const std::size_t width = rows.front().size();
    if (width == 0) throw std::invalid_argument("matrix row is empty");
    Matrix m = make_matrix(static_cast<int>(rows.size()), static_cast<int>(width));
    for (int t = 0; t < m.n; ++t) {
        if (rows[t].size() != width) throw std::invalid_argument("matrix rows are ragged");
        for (int j = 0; j < m.N; ++j) {
            char c = rows[t][static_cast<std::size_t>(j)];
            if (c != '0' && c != '1') throw std::invalid_argument("matrix character not in 0/1");
            m.at(t, j) = static_cast<std::uint8_t>(c - '0');
        }
    }
    return m;
}

std::string save_matrix(const Matrix& code) {
    if (code.n < 1 || code.N < 1) throw std::invalid_argument("matrix dimensions must be positive");
    std::string out;
    out.reserve(static_cast<std::size_t>(code.n) * (code.N + 1));
    for (int t = 0; t < code.n; ++t) {
        for (int j = 0; j < code.N; ++j) {
            std::uint8_t v = code.at(t, j);
            if (v > 1) throw std::invalid_argument("matrix entry not binary");
            out.push_back(static_cast<char>('0' + v));
        }
        out.push_back('\n');
    }
    return out;
}

Word observation(const Matrix& code, const std::vector<int>& defectives) {
    check_defectives(code, defectives);
    std::vector<Word> cols;
    cols.reserve(defectives.size());
    for (int j : defectives) cols.push_back(code.column(j));
    return word_sum(cols);
}

Word ggt_observation(const Matrix& code, const std::vector<int>& defectives,
                     int eta1, int eta2) {
    check_defectives(code, defectives);
    if (eta1 < 0 || eta1 > eta2) throw std::invalid_argument("thresholds must satisfy 0 <= eta1 <= eta2");
    Word y(static_cast<std::size_t>(code.n));
    for (int t = 0; t < code.n; ++t) {
        int k = 0;
        for (int j : defectives) k += code.at(t, j);
        y[t] = k <= eta1 ? 0 : (k > eta2 ? 1 : 2);
    }
    return y;
}

Word apply_noise(const Word& y, double q, std::mt19937_64& rng) {
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must lie in [0, 1]");
    Word out(y.size());
    for (std::size_t t = 0; t < y.size(); ++t) {
        Symbol z = bernoulli(rng, q) ? 1 : 0;
        out[t] = tern_add(y[t], z);
    }
    return out;
}

bool bernoulli(std::mt19937_64& rng, double q) {
    // Top 53 bits give a uniform double in [0, 1); strict compare so q = 0
    // never fires and q = 1 always does.
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return u < q;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below needs positive bound");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        std::uint64_t v = rng();
        if (v < limit) return v % bound;
    }
}

} // namespace sgt
