#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "lch/error.hpp"

namespace lch {

using Gen = std::uint16_t;
using Word = std::vector<Gen>;

struct GeneratorTable {
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<double> actions;  // empty when no areas were given

    GeneratorTable() = default;
    GeneratorTable(std::vector<std::string> n, std::vector<int> d, std::vector<double> a = {});

    int size() const { return static_cast<int>(names.size()); }
    int find(const std::string& name) const;
    Gen at(const std::string& name) const;  // throws
    bool has_actions() const { return !actions.empty(); }

    int degree(const Word& w) const;
    double action(const Word& w) const;
    bool same_universe(const GeneratorTable& o) const;

  private:
    std::unordered_map<std::string, int> index_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

TablePtr make_table(std::vector<std::string> names, std::vector<int> degrees,
                    std::vector<double> actions = {});

// GF(2) element of the free unital algebra; terms kept sorted and unique.
class Poly {
  public:
    Poly() = default;
    explicit Poly(TablePtr t) : table_(std::move(t)) {}

    static Poly zero(TablePtr t) { return Poly(std::move(t)); }
    static Poly one(TablePtr t);
    static Poly gen(TablePtr t, Gen g);
    static Poly word(TablePtr t, Word w);
    static Poly from_words(TablePtr t, std::vector<Word> ws);  // collects mod 2

    const TablePtr& table() const { return table_; }
    const std::vector<Word>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].empty(); }
    bool has_unit() const { return !terms_.empty() && terms_[0].empty(); }
    std::size_t size() const { return terms_.size(); }

    void toggle(const Word& w);
    Poly& operator+=(const Poly& q);

    bool operator==(const Poly& q) const { return terms_ == q.terms_; }
    bool operator!=(const Poly& q) const { return !(*this == q); }

  private:
    TablePtr table_;
    std::vector<Word> terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly multiply(const Poly& p, const Poly& q);
inline Poly operator+(const Poly& p, const Poly& q) { return add(p, q); }
inline Poly operator*(const Poly& p, const Poly& q) { return multiply(p, q); }

// images[i] is the image of source generator i; all images live over `target`
Poly substitute(const Poly& p, const std::vector<Poly>& images, const TablePtr& target);
Poly substitute(const Poly& p, const std::unordered_map<std::string, Poly>& images,
                const TablePtr& target);

// value of p under a GF(2) assignment of the generators
int evaluate(const Poly& p, const std::vector<std::uint8_t>& values);

// move a polynomial to another table by generator name
Poly rename_into(const Poly& p, const TablePtr& target,
                 const std::unordered_map<std::string, std::string>& relabel = {});

bool natural_less(const std::string& a, const std::string& b);
std::string render(const Poly& p);
std::string render_word(const GeneratorTable& t, const Word& w);
Poly parse_poly(const std::string& text, const TablePtr& t);

}  // namespace lch
