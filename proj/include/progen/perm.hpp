// Permutations of {0,..,degree-1} with disjoint-cycle text form.
#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace progen {

class Perm {
public:
    Perm() = default;
    explicit Perm(size_t degree) : img_(degree) { std::iota(img_.begin(), img_.end(), 0); }
    explicit Perm(std::vector<uint32_t> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (uint32_t v : img_) {
            if (v >= img_.size() || seen[v]) throw std::invalid_argument("Perm: images not a bijection");
            seen[v] = true;
        }
    }

    size_t degree() const { return img_.size(); }
    uint32_t operator[](size_t i) const { return img_[i]; }
    const std::vector<uint32_t>& images() const { return img_; }

    bool is_identity() const {
        for (size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    // (a*b)[i] = b[a[i]] : apply a first, then b.
    friend Perm operator*(const Perm& a, const Perm& b) {
        if (a.degree() != b.degree()) throw std::invalid_argument("Perm: degree mismatch");
        std::vector<uint32_t> r(a.degree());
        for (size_t i = 0; i < r.size(); ++i) r[i] = b.img_[a.img_[i]];
        Perm p;
        p.img_ = std::move(r);
        return p;
    }

    Perm inverse() const {
        std::vector<uint32_t> r(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) r[img_[i]] = static_cast<uint32_t>(i);
        Perm p;
        p.img_ = std::move(r);
        return p;
    }

    Perm conj(const Perm& g) const {  // g^-1 * this * g
        return g.inverse() * (*this) * g;
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    uint64_t order() const {
        std::vector<bool> seen(img_.size(), false);
        uint64_t ord = 1;
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            uint64_t len = 0;
            size_t j = i;
            do {
                seen[j] = true;
                j = img_[j];
                ++len;
            } while (j != i);
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    std::string cycles() const {
        std::string s;
        std::vector<bool> seen(img_.size(), false);
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i] || img_[i] == i) { seen[i] = true; continue; }
            s += "(";
            size_t j = i;
            bool first = true;
            do {
                if (!first) s += " ";
                s += std::to_string(j);
                seen[j] = true;
                first = false;
                j = img_[j];
            } while (j != i);
            s += ")";
        }
        return s.empty() ? "()" : s;
    }

    // Parses "(0 1 2)(3 4)" over a fixed degree; "()" is the identity.
    static Perm parse_cycles(const std::string& text, size_t degree) {
        Perm p(degree);
        std::vector<uint32_t>& img = p.img_;
        size_t i = 0;
        auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i; };
        skip_ws();
        while (i < text.size()) {
            if (text[i] != '(') throw std::invalid_argument("Perm: expected '('");
            ++i;
            std::vector<uint32_t> cyc;
            skip_ws();
            while (i < text.size() && text[i] != ')') {
                size_t j = i;
                while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
                if (j == i) throw std::invalid_argument("Perm: expected point");
                uint32_t pt = static_cast<uint32_t>(std::stoul(text.substr(i, j - i)));
                if (pt >= degree) throw std::invalid_argument("Perm: point out of range");
                cyc.push_back(pt);
                i = j;
                skip_ws();
            }
            if (i == text.size()) throw std::invalid_argument("Perm: unterminated cycle");
            ++i;  // ')'
            for (size_t k = 0; k + 1 < cyc.size(); ++k) img[cyc[k]] = cyc[k + 1];
            if (cyc.size() > 1) img[cyc.back()] = cyc[0];
            skip_ws();
        }
        std::vector<bool> seen(degree, false);
        for (uint32_t v : img) {
            if (seen[v]) throw std::invalid_argument("Perm: cycles overlap");
            seen[v] = true;
        }
        return p;
    }

private:
    std::vector<uint32_t> img_;
};

}  // namespace progen
