#include "orbi/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace orbi {

Word Word::inverse() const {
    Word r;
    r.letters.reserve(letters.size());
    for (size_t i = letters.size(); i-- > 0;) r.letters.push_back(-letters[i]);
    return r;
}

Word operator*(const Word& a, const Word& b) {
    Word r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return free_reduce(r);
}

std::string Word::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ",";
        os << letters[i];
    }
    os << "]";
    return os.str();
}

Word free_reduce(const Word& w) {
    Word r;
    for (int x : w.letters) {
        if (x == 0) throw input_error("word letter 0 is not a generator");
        if (!r.letters.empty() && r.letters.back() == -x)
            r.letters.pop_back();
        else
            r.letters.push_back(x);
    }
    return r;
}

GammaSpec GammaSpec::free_abelian(int d) {
    if (d < 1) throw input_error("free abelian rank must be >= 1");
    GammaSpec s;
    s.kind = Kind::free_abelian;
    s.rank = d;
    return s;
}

GammaSpec GammaSpec::free(int k) {
    if (k < 1) throw input_error("free rank must be >= 1");
    GammaSpec s;
    s.kind = Kind::free;
    s.rank = k;
    return s;
}

GammaSpec GammaSpec::presented(int k, std::vector<Word> relators) {
    if (k < 1) throw input_error("presented rank must be >= 1");
    GammaSpec s;
    s.kind = Kind::presented;
    s.rank = k;
    for (auto& r : relators) {
        Word reduced = free_reduce(r);
        if (reduced.empty()) throw input_error("relator reduces to the empty word");
        for (int x : reduced.letters)
            if (std::abs(x) > k) throw input_error("relator letter out of range");
        s.relators.push_back(std::move(reduced));
    }
    return s;
}

Elem evaluate_word(const Word& w, std::span<const Elem> images, const FiniteGroup& g) {
    Elem acc = g.identity();
    for (int x : w.letters) {
        int idx = std::abs(x) - 1;
        if (idx < 0 || idx >= (int)images.size())
            throw input_error("word letter out of range: " + std::to_string(x));
        Elem im = x > 0 ? images[idx] : g.inv(images[idx]);
        acc = g.mult(acc, im);
    }
    return acc;
}

bool is_hom(std::span<const Elem> images, const GammaSpec& gamma, const FiniteGroup& g) {
    if ((int)images.size() != gamma.rank)
        throw input_error("image count does not match the rank of Gamma");
    switch (gamma.kind) {
        case GammaSpec::Kind::free:
            return true;
        case GammaSpec::Kind::free_abelian:
            for (size_t i = 0; i < images.size(); ++i)
                for (size_t j = i + 1; j < images.size(); ++j)
                    if (!g.commutes(images[i], images[j])) return false;
            return true;
        case GammaSpec::Kind::presented:
            for (const Word& r : gamma.relators)
                if (evaluate_word(r, images, g) != g.identity()) return false;
            return true;
    }
    return false;
}

}  // namespace orbi
