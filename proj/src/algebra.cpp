#include "lch/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lch {

GeneratorTable::GeneratorTable(std::vector<std::string> n, std::vector<int> d, std::vector<double> a)
    : names(std::move(n)), degrees(std::move(d)), actions(std::move(a))
{
    if (degrees.size() != names.size())
        throw Error("table", "degree list length mismatch");
    if (!actions.empty() && actions.size() != names.size())
        throw Error("table", "action list length mismatch");
    if (names.size() > 65535)
        throw Error("table", "too many generators");
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!index_.emplace(names[i], static_cast<int>(i)).second)
            throw Error("table", "duplicate generator " + names[i]);
    }
}

int GeneratorTable::find(const std::string& name) const
{
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

Gen GeneratorTable::at(const std::string& name) const
{
    int i = find(name);
    if (i < 0)
        throw Error("unknown-generator", name);
    return static_cast<Gen>(i);
}

int GeneratorTable::degree(const Word& w) const
{
    int s = 0;
    for (Gen g : w)
        s += degrees[g];
    return s;
}

double GeneratorTable::action(const Word& w) const
{
    if (actions.empty())
        throw Error("missing-actions", "generator table has no actions");
    double s = 0;
    for (Gen g : w)
        s += actions[g];
    return s;
}

bool GeneratorTable::same_universe(const GeneratorTable& o) const
{
    return this == &o || names == o.names;
}

TablePtr make_table(std::vector<std::string> names, std::vector<int> degrees, std::vector<double> actions)
{
    return std::make_shared<const GeneratorTable>(std::move(names), std::move(degrees), std::move(actions));
}

static void check_universe(const Poly& p, const Poly& q)
{
    if (p.table() == q.table())
        return;
    if (!p.table() || !q.table() || !p.table()->same_universe(*q.table()))
        throw Error("universe", "generator-universe mismatch");
}

Poly Poly::one(TablePtr t)
{
    Poly p(std::move(t));
    p.terms_.emplace_back();
    return p;
}

Poly Poly::gen(TablePtr t, Gen g)
{
    Poly p(std::move(t));
    p.terms_.push_back(Word{g});
    return p;
}

Poly Poly::word(TablePtr t, Word w)
{
    Poly p(std::move(t));
    p.terms_.push_back(std::move(w));
    return p;
}

// sort, then drop pairs
static void collect(std::vector<Word>& ws)
{
    std::sort(ws.begin(), ws.end());
    std::size_t out = 0, i = 0;
    while (i < ws.size()) {
        std::size_t j = i;
        while (j < ws.size() && ws[j] == ws[i])
            ++j;
        if ((j - i) % 2 == 1) {
            if (out != i)
                ws[out] = std::move(ws[i]);
            ++out;
        }
        i = j;
    }
    ws.resize(out);
}

Poly Poly::from_words(TablePtr t, std::vector<Word> ws)
{
    Poly p(std::move(t));
    collect(ws);
    p.terms_ = std::move(ws);
    return p;
}

void Poly::toggle(const Word& w)
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w);
    if (it != terms_.end() && *it == w)
        terms_.erase(it);
    else
        terms_.insert(it, w);
}

Poly& Poly::operator+=(const Poly& q)
{
    *this = add(*this, q);
    return *this;
}

Poly add(const Poly& p, const Poly& q)
{
    check_universe(p, q);
    Poly r(p.table() ? p.table() : q.table());
    std::vector<Word> out;
    out.reserve(p.size() + q.size());
    std::set_symmetric_difference(p.terms().begin(), p.terms().end(), q.terms().begin(),
                                  q.terms().end(), std::back_inserter(out));
    return Poly::from_words(r.table(), std::move(out));
}

Poly multiply(const Poly& p, const Poly& q)
{
    check_universe(p, q);
    std::vector<Word> out;
    out.reserve(p.size() * q.size());
    for (const Word& a : p.terms())
        for (const Word& b : q.terms()) {
            Word w;
            w.reserve(a.size() + b.size());
            w.insert(w.end(), a.begin(), a.end());
            w.insert(w.end(), b.begin(), b.end());
            out.push_back(std::move(w));
        }
    return Poly::from_words(p.table() ? p.table() : q.table(), std::move(out));
}

Poly substitute(const Poly& p, const std::vector<Poly>& images, const TablePtr& target)
{
    std::vector<Word> out;
    for (const Word& w : p.terms()) {
        std::vector<Word> acc{Word{}};
        for (Gen g : w) {
            if (g >= images.size() || !images[g].table())
                throw Error("missing-image", "no image for generator #" + std::to_string(g));
            const Poly& im = images[g];
            if (im.table() != target && !im.table()->same_universe(*target))
                throw Error("universe", "image over a different generator universe");
            std::vector<Word> next;
            next.reserve(acc.size() * im.size());
            for (const Word& a : acc)
                for (const Word& b : im.terms()) {
                    Word x = a;
                    x.insert(x.end(), b.begin(), b.end());
                    next.push_back(std::move(x));
                }
            collect(next);
            acc = std::move(next);
            if (acc.empty())
                break;
        }
        for (Word& a : acc)
            out.push_back(std::move(a));
    }
    return Poly::from_words(target, std::move(out));
}

Poly substitute(const Poly& p, const std::unordered_map<std::string, Poly>& images, const TablePtr& target)
{
    std::vector<Poly> v(p.table() ? p.table()->size() : 0);
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        auto it = images.find(p.table()->names[i]);
        if (it != images.end())
            v[i] = it->second;
    }
    return substitute(p, v, target);
}

int evaluate(const Poly& p, const std::vector<std::uint8_t>& values)
{
    int s = 0;
    for (const Word& w : p.terms()) {
        int m = 1;
        for (Gen g : w) {
            if (!values[g]) {
                m = 0;
                break;
            }
        }
        s ^= m;
    }
    return s;
}

Poly rename_into(const Poly& p, const TablePtr& target, const std::unordered_map<std::string, std::string>& relabel)
{
    std::vector<Word> out;
    out.reserve(p.size());
    for (const Word& w : p.terms()) {
        Word x;
        x.reserve(w.size());
        for (Gen g : w) {
            const std::string& n = p.table()->names[g];
            auto it = relabel.find(n);
            x.push_back(target->at(it == relabel.end() ? n : it->second));
        }
        out.push_back(std::move(x));
    }
    return Poly::from_words(target, std::move(out));
}

// b2 < b10
bool natural_less(const std::string& a, const std::string& b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2])))
                ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2])))
                ++j2;
            std::string na = a.substr(i, i2 - i), nb = b.substr(j, j2 - j);
            while (na.size() > 1 && na[0] == '0')
                na.erase(0, 1);
            while (nb.size() > 1 && nb[0] == '0')
                nb.erase(0, 1);
            if (na.size() != nb.size())
                return na.size() < nb.size();
            if (na != nb)
                return na < nb;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j])
                return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

std::string render_word(const GeneratorTable& t, const Word& w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += '*';
        s += t.names[w[i]];
    }
    return s;
}

std::string render(const Poly& p)
{
    if (p.is_zero())
        return "0";
    const GeneratorTable& t = *p.table();
    std::vector<const Word*> ws;
    for (const Word& w : p.terms())
        ws.push_back(&w);
    std::sort(ws.begin(), ws.end(), [&](const Word* x, const Word* y) {
        std::size_t n = std::min(x->size(), y->size());
        for (std::size_t k = 0; k < n; ++k) {
            const std::string& a = t.names[(*x)[k]];
            const std::string& b = t.names[(*y)[k]];
            if (a != b)
                return natural_less(a, b);
        }
        return x->size() < y->size();
    });
    std::string s;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i)
            s += " + ";
        s += render_word(t, *ws[i]);
    }
    return s;
}

Poly parse_poly(const std::string& text, const TablePtr& t)
{
    std::vector<Word> out;
    std::string cur;
    auto flush = [&](const std::string& term) {
        std::string s;
        for (char c : term)
            if (!std::isspace(static_cast<unsigned char>(c)))
                s += c;
        if (s.empty())
            throw Error("syntax", "empty term in '" + text + "'");
        if (s == "0")
            return;
        if (s == "1") {
            out.emplace_back();
            return;
        }
        Word w;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, '*')) {
            if (tok == "1")
                continue;
            w.push_back(t->at(tok));
        }
        out.push_back(std::move(w));
    };
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '+') {
            flush(text.substr(start, i - start));
            start = i + 1;
        }
    }
    return Poly::from_words(t, std::move(out));
}

}  // namespace lch
