#include "cwilf/permutation.hpp"

#include "cwilf/bigint.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace cwilf {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : entries_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw invalid_input("permutation entries must be a bijection on 1..n: " +
                                [&] {
                                    std::ostringstream os;
                                    for (int e : entries_) os << e << ' ';
                                    return os.str();
                                }());
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw invalid_input("identity: negative length");
    std::vector<int> e(static_cast<size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

std::vector<int> parse_word(std::string_view text) {
    std::vector<int> vals;
    const bool spaced = text.find_first_of(" \t") != std::string_view::npos;
    if (spaced) {
        std::string buf(text);
        for (char& c : buf)
            if (c == '\t') c = ' ';
        std::istringstream is(buf);
        int v;
        while (is >> v) vals.push_back(v);
        if (!is.eof()) throw invalid_input("cannot parse word: '" + std::string(text) + "'");
    } else {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw invalid_input("cannot parse word: '" + std::string(text) + "'");
            vals.push_back(c - '0');
        }
    }
    return vals;
}

Permutation Permutation::parse(std::string_view text) {
    return Permutation(parse_word(text));
}

std::string Permutation::str() const {
    std::ostringstream os;
    if (size() <= 9) {
        for (int v : entries_) os << v;
    } else {
        for (size_t i = 0; i < entries_.size(); ++i) {
            if (i) os << ' ';
            os << entries_[i];
        }
    }
    return os.str();
}

Permutation reduce(std::span<const int> word) {
    const size_t n = word.size();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return word[a] < word[b]; });
    std::vector<int> out(n);
    for (size_t r = 0; r < n; ++r) {
        if (r > 0 && word[idx[r]] == word[idx[r - 1]])
            throw invalid_input("reduce: entries must be pairwise distinct");
        out[idx[r]] = static_cast<int>(r) + 1;
    }
    return Permutation(std::move(out));
}

int des_of(std::span<const int> w) {
    int d = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) ++d;
    return d;
}

long long inv_of(std::span<const int> w) {
    long long inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

long long coinv_of(std::span<const int> w) {
    const long long n = static_cast<long long>(w.size());
    return n * (n - 1) / 2 - inv_of(w);
}

int lrmin_of(std::span<const int> w) {
    int count = 0;
    int best = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i == 0 || w[i] < best) {
            ++count;
            best = w[i];
        }
    }
    return count;
}

StatBundle stats(const Permutation& sigma) {
    StatBundle b;
    auto w = sigma.span();
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) b.des_set.push_back(static_cast<int>(i) + 1);
    b.des = static_cast<int>(b.des_set.size());
    b.inv = inv_of(w);
    b.coinv = coinv_of(w);
    b.lrmin = lrmin_of(w);
    return b;
}

PatternSet::PatternSet(std::vector<Permutation> patterns) {
    if (patterns.empty()) throw invalid_input("pattern set must be non-empty");
    length_ = patterns.front().size();
    if (length_ < 1) throw invalid_input("patterns must have length >= 1");
    for (const auto& p : patterns)
        if (p.size() != length_)
            throw invalid_input("pattern set mixes lengths " + std::to_string(length_) + " and " +
                                std::to_string(p.size()));
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    patterns_ = std::move(patterns);
    codes_.reserve(patterns_.size());
    for (const auto& p : patterns_) codes_.push_back(lehmer_code(p.span()));
    std::sort(codes_.begin(), codes_.end());
    if (patterns_.size() == 1) {
        // positions of the single pattern sorted by value; a window is
        // order-isomorphic iff it increases along this chain
        single_pos_by_rank_.resize(static_cast<size_t>(length_));
        const auto& p = patterns_.front();
        for (int i = 0; i < length_; ++i)
            single_pos_by_rank_[static_cast<size_t>(p.at(i + 1) - 1)] = i;
    }
}

PatternSet PatternSet::parse(std::string_view csv) {
    std::vector<Permutation> ps;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string_view tok = csv.substr(start, comma - start);
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a != std::string_view::npos) ps.push_back(Permutation::parse(tok.substr(a, b - a + 1)));
        start = comma + 1;
        if (comma == csv.size()) break;
    }
    return PatternSet(std::move(ps));
}

bool PatternSet::contains(const Permutation& p) const {
    return std::binary_search(patterns_.begin(), patterns_.end(), p);
}

bool PatternSet::matches_window(std::span<const int> w) const {
    if (static_cast<int>(w.size()) != length_) return false;
    if (patterns_.size() == 1) {
        for (size_t r = 0; r + 1 < single_pos_by_rank_.size(); ++r)
            if (w[static_cast<size_t>(single_pos_by_rank_[r])] >=
                w[static_cast<size_t>(single_pos_by_rank_[r + 1])])
                return false;
        return true;
    }
    return std::binary_search(codes_.begin(), codes_.end(), lehmer_code(w));
}

std::string PatternSet::str() const {
    std::string s;
    for (size_t i = 0; i < patterns_.size(); ++i) {
        if (i) s += ',';
        s += patterns_[i].str();
    }
    return s;
}

PatternBag::PatternBag(const std::vector<Permutation>& patterns) {
    if (patterns.empty()) throw invalid_input("pattern bag must be non-empty");
    std::map<int, std::vector<Permutation>> by_len;
    for (const auto& p : patterns) by_len[p.size()].push_back(p);
    for (auto& [len, ps] : by_len) groups_.emplace_back(std::move(ps));
}

PatternBag PatternBag::parse(std::string_view csv) {
    std::vector<Permutation> ps;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string_view tok = csv.substr(start, comma - start);
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a != std::string_view::npos) ps.push_back(Permutation::parse(tok.substr(a, b - a + 1)));
        start = comma + 1;
        if (comma == csv.size()) break;
    }
    return PatternBag(ps);
}

void PatternBag::canonicalize() {
    std::sort(groups_.begin(), groups_.end(),
              [](const PatternSet& a, const PatternSet& b) { return a.length() < b.length(); });
}

int PatternBag::count() const {
    int c = 0;
    for (const auto& g : groups_) c += g.count();
    return c;
}

int PatternBag::min_length() const {
    if (groups_.empty()) throw invalid_input("pattern bag is empty");
    return groups_.front().length();
}

std::vector<Permutation> PatternBag::all_patterns() const {
    std::vector<Permutation> out;
    for (const auto& g : groups_)
        out.insert(out.end(), g.patterns().begin(), g.patterns().end());
    return out;
}

std::string PatternBag::str() const {
    std::string s;
    for (size_t i = 0; i < groups_.size(); ++i) {
        if (i) s += ',';
        s += groups_[i].str();
    }
    return s;
}

int count_matches(std::span<const int> sigma, const PatternBag& bag) {
    int c = 0;
    for (const auto& g : bag.groups()) c += count_matches(sigma, g);
    return c;
}

bool has_match(std::span<const int> sigma, const PatternBag& bag) {
    for (const auto& g : bag.groups())
        if (has_match(sigma, g)) return true;
    return false;
}

std::vector<int> match_positions(std::span<const int> sigma, const PatternSet& gamma) {
    std::vector<int> out;
    const int n = static_cast<int>(sigma.size());
    const int j = gamma.length();
    for (int i = 0; i + j <= n; ++i)
        if (gamma.matches_window(sigma.subspan(static_cast<size_t>(i), static_cast<size_t>(j))))
            out.push_back(i + 1);
    return out;
}

int count_matches(std::span<const int> sigma, const PatternSet& gamma) {
    int c = 0;
    const int n = static_cast<int>(sigma.size());
    const int j = gamma.length();
    for (int i = 0; i + j <= n; ++i)
        if (gamma.matches_window(sigma.subspan(static_cast<size_t>(i), static_cast<size_t>(j)))) ++c;
    return c;
}

bool has_match(std::span<const int> sigma, const PatternSet& gamma) {
    const int n = static_cast<int>(sigma.size());
    const int j = gamma.length();
    for (int i = 0; i + j <= n; ++i)
        if (gamma.matches_window(sigma.subspan(static_cast<size_t>(i), static_cast<size_t>(j)))) return true;
    return false;
}

namespace {

bool occurs_rec(std::span<const int> sigma, const PatternSet& gamma, std::vector<int>& chosen,
                size_t from) {
    if (static_cast<int>(chosen.size()) == gamma.length())
        return gamma.matches_window(chosen);
    const size_t need = static_cast<size_t>(gamma.length()) - chosen.size();
    for (size_t i = from; i + need <= sigma.size(); ++i) {
        chosen.push_back(sigma[i]);
        if (occurs_rec(sigma, gamma, chosen, i + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

bool occurs(const Permutation& sigma, const PatternSet& gamma) {
    if (gamma.length() > sigma.size()) return false;
    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(gamma.length()));
    return occurs_rec(sigma.span(), gamma, chosen, 0);
}

uint64_t lehmer_code(std::span<const int> w) {
    // code = sum over i of (# of later entries smaller than w[i]) * (n-1-i)!
    const size_t n = w.size();
    uint64_t code = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t smaller = 0;
        for (size_t j = i + 1; j < n; ++j)
            if (w[j] < w[i]) ++smaller;
        code = code * (n - i) + smaller;
    }
    return code;
}

uint64_t perm_rank(std::span<const int> sigma) { return lehmer_code(sigma); }

std::vector<int> perm_unrank(int n, uint64_t rank) {
    std::vector<int> avail(static_cast<size_t>(n));
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<uint64_t> fact(static_cast<size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i) fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * static_cast<uint64_t>(i);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        const uint64_t f = fact[static_cast<size_t>(i)];
        const size_t d = static_cast<size_t>(rank / f);
        rank %= f;
        out.push_back(avail[d]);
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return out;
}

void for_each_in_sn(int n, uint64_t begin_rank, uint64_t end_rank,
                    const std::function<void(std::span<const int>)>& visit) {
    if (n < 0) throw invalid_input("for_each_in_sn: negative n");
    if (n == 0) {
        if (begin_rank == 0 && end_rank > 0) visit({});
        return;
    }
    if (begin_rank >= end_rank) return;
    std::vector<int> buf = perm_unrank(n, begin_rank);
    for (uint64_t r = begin_rank; r < end_rank; ++r) {
        visit(buf);
        if (!std::next_permutation(buf.begin(), buf.end())) break;
    }
}

void for_each_in_sn(int n, const std::function<void(std::span<const int>)>& visit) {
    Int total = factorial(n);
    for_each_in_sn(n, 0, static_cast<uint64_t>(total), visit);
}

} // namespace cwilf
