#include "cwilf/permutation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

namespace cwilf {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    int n = size();
    if (n < 1) throw InvalidInputError("permutation must have length >= 1");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : word_) {
        if (v < 1 || v > n || seen[v]) {
            throw InvalidInputError("word is not a permutation of 1.." +
                                    std::to_string(n));
        }
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            size_t pos = 0;
            int v;
            try {
                v = std::stoi(item, &pos);
            } catch (const std::exception&) {
                throw InvalidInputError("unparseable pattern entry '" + item +
                                        "'");
            }
            while (pos < item.size() && std::isspace(
                       static_cast<unsigned char>(item[pos])))
                ++pos;
            if (pos != item.size())
                throw InvalidInputError("unparseable pattern entry '" + item +
                                        "'");
            w.push_back(v);
        }
    } else {
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw InvalidInputError("unparseable pattern '" + text + "'");
            w.push_back(c - '0');
        }
    }
    if (w.empty()) throw InvalidInputError("empty pattern");
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 0; i < size(); ++i) inv[word_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::reversed() const {
    std::vector<int> w(word_.rbegin(), word_.rend());
    return Permutation(std::move(w));
}

Permutation Permutation::complemented() const {
    int n = size();
    std::vector<int> w(word_.size());
    for (int i = 0; i < n; ++i) w[i] = n + 1 - word_[i];
    return Permutation(std::move(w));
}

Permutation Permutation::reverse_complemented() const {
    return reversed().complemented();
}

std::string Permutation::str() const {
    if (size() <= 9) {
        std::string s;
        for (int v : word_) s += static_cast<char>('0' + v);
        return s;
    }
    return canonical_str();
}

std::string Permutation::canonical_str() const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
        if (i) s += ',';
        s += std::to_string(word_[i]);
    }
    return s;
}

Permutation standardize(const std::vector<int>& word) {
    if (word.empty()) throw InvalidInputError("cannot standardize empty word");
    std::vector<int> idx(word.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return word[a] < word[b]; });
    for (size_t i = 1; i < idx.size(); ++i) {
        if (word[idx[i]] == word[idx[i - 1]])
            throw InvalidInputError("duplicate entries in word");
    }
    std::vector<int> ranks(word.size());
    for (size_t r = 0; r < idx.size(); ++r)
        ranks[idx[r]] = static_cast<int>(r) + 1;
    return Permutation(std::move(ranks));
}

OccurrenceSet occurrences(const Permutation& pattern, const Permutation& perm) {
    int m = pattern.size();
    int n = perm.size();
    OccurrenceSet out;
    out.pattern_length = m;
    out.ambient_length = n;
    if (m > n) return out;
    const auto eta = pattern.inverse().word();  // eta[r-1]: position of rank r
    const auto& v = perm.word();
    for (int i = 0; i + m <= n; ++i) {
        bool ok = true;
        for (int r = 1; r < m; ++r) {
            if (v[i + eta[r - 1] - 1] >= v[i + eta[r] - 1]) {
                ok = false;
                break;
            }
        }
        if (ok) out.positions.push_back(i + 1);
    }
    return out;
}

bool OverlapSet::contains(int i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
}

OverlapSet overlap_set(const Permutation& pattern) {
    int m = pattern.size();
    if (m < 2) throw InvalidInputError("overlap set requires length >= 2");
    const auto& w = pattern.word();
    OverlapSet out;
    out.pattern_length = m;
    for (int i = 1; i <= m - 1; ++i) {
        std::vector<int> suffix(w.begin() + i, w.end());
        std::vector<int> prefix(w.begin(), w.begin() + (m - i));
        if (standardize(suffix) == standardize(prefix)) out.indices.push_back(i);
    }
    return out;
}

bool is_nonoverlapping(const Permutation& pattern) {
    auto o = overlap_set(pattern);
    return o.indices.size() == 1;  // always contains m-1
}

const char* symmetry_name(Symmetry s) {
    switch (s) {
        case Symmetry::identity: return "identity";
        case Symmetry::reverse: return "reverse";
        case Symmetry::complement: return "complement";
        case Symmetry::reverse_complement: return "reverse_complement";
    }
    return "?";
}

Permutation apply_symmetry(const Permutation& p, Symmetry s) {
    switch (s) {
        case Symmetry::identity: return p;
        case Symmetry::reverse: return p.reversed();
        case Symmetry::complement: return p.complemented();
        case Symmetry::reverse_complement: return p.reverse_complemented();
    }
    throw InternalError("bad symmetry");
}

bool is_standard_form(const Permutation& p) {
    int m = p.size();
    return p.at(1) < p.at(m) && p.at(1) + p.at(m) <= m + 1;
}

StandardForm to_standard_form(const Permutation& p) {
    if (p.size() < 2)
        throw InvalidInputError("standard form requires length >= 2");
    static constexpr std::array<Symmetry, 4> order = {
        Symmetry::identity, Symmetry::reverse, Symmetry::complement,
        Symmetry::reverse_complement};
    const Permutation* best = nullptr;
    Symmetry best_sym = Symmetry::identity;
    std::vector<Permutation> images;
    images.reserve(4);
    for (Symmetry s : order) images.push_back(apply_symmetry(p, s));
    for (size_t i = 0; i < images.size(); ++i) {
        if (!is_standard_form(images[i])) continue;
        if (best == nullptr || images[i] < *best) {
            best = &images[i];
            best_sym = order[i];
        }
    }
    if (best == nullptr)
        throw InternalError("no symmetry image in standard form");
    return StandardForm{*best, best_sym};
}

}  // namespace cwilf
