#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mhcy/laurent.hpp"

namespace mhcy {

struct KGenerator {
    std::string name;
    int dim = 0;
    // sheaf Euler characteristic of the generator, the linear functional
    // used by the Euler-level shadow checks
    Rational euler = 0;
};

// A Grothendieck group of coherent-sheaf classes given by generators
// (structure sheaves of declared strata) and integer relations. Normal
// forms eliminate the earliest declared generator of each relation.
class KPresentation : public std::enable_shared_from_this<KPresentation> {
public:
    static std::shared_ptr<const KPresentation> make(std::string name,
                                                     std::vector<KGenerator> gens,
                                                     std::vector<std::vector<Rational>> relations,
                                                     bool builtin);

    const std::string& name() const { return name_; }
    bool builtin() const { return builtin_; }
    const std::vector<KGenerator>& generators() const { return gens_; }
    unsigned index_of(const std::string& gen_name) const;  // throws on unknown
    bool has(const std::string& gen_name) const;

    struct Rule {
        unsigned pivot;
        std::vector<std::pair<unsigned, Rational>> tail;
    };
    const std::vector<Rule>& rules() const { return rules_; }

    // normalizes raw coefficients in place
    void normalize(std::map<unsigned, LaurentPoly>& coeff) const;
    void normalize_reversed(std::map<unsigned, LaurentPoly>& coeff) const;

    // random elements reduced along two strategies must agree
    void self_test(unsigned samples, unsigned seed) const;

private:
    std::string name_;
    std::vector<KGenerator> gens_;
    std::vector<std::vector<Rational>> raw_relations_;
    std::vector<Rule> rules_;
    bool builtin_ = false;

    void build_rules();
    void validate() const;
};

// Element of a presented K-group with Laurent coefficients in y, kept in
// normal form with zero coefficients dropped.
class KClass {
public:
    KClass() = default;
    explicit KClass(std::shared_ptr<const KPresentation> pres) : pres_(std::move(pres)) {}
    KClass(std::shared_ptr<const KPresentation> pres, std::map<unsigned, LaurentPoly> raw);

    static KClass generator(std::shared_ptr<const KPresentation> pres, const std::string& name,
                            LaurentPoly coeff = LaurentPoly::one());

    const std::shared_ptr<const KPresentation>& presentation() const { return pres_; }
    const std::map<unsigned, LaurentPoly>& coefficients() const { return coeff_; }
    bool is_zero() const { return coeff_.empty(); }
    LaurentPoly coefficient(const std::string& gen_name) const;

    KClass operator-() const;
    KClass operator+(const KClass& o) const;
    KClass operator-(const KClass& o) const;
    KClass& operator+=(const KClass& o);
    KClass& operator-=(const KClass& o);
    KClass scaled(const LaurentPoly& s) const;
    KClass scaled(const Rational& s) const;
    bool operator==(const KClass& o) const;
    bool operator!=(const KClass& o) const { return !(*this == o); }

    bool divisible_by_one_plus_y() const;
    KClass divide_by_one_plus_y() const;  // throws divisibility_error

    std::map<unsigned, Rational> eval_at(const Rational& y0) const;
    // sum over generators of euler(gen) * coeff(gen)(y0)
    Rational euler_pairing_at(const Rational& y0) const;

    std::string to_string() const;

private:
    std::shared_ptr<const KPresentation> pres_;
    std::map<unsigned, LaurentPoly> coeff_;

    void check_same(const KClass& o) const;
};

// Gysin data: image of every source generator in the target presentation.
struct GysinTable {
    std::shared_ptr<const KPresentation> source;
    std::shared_ptr<const KPresentation> target;
    std::map<unsigned, KClass> image;

    void set(const std::string& src_gen, KClass img);
};

// Additive LaurentPoly-linear extension of the table.
KClass gysin_shriek(const KClass& c, const GysinTable& table);

}  // namespace mhcy
