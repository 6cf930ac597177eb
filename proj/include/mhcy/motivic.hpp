#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mhcy/kgroup.hpp"

namespace mhcy {

// A registered generator [Z -> X]: a closed stratum or a compact smooth
// piece with its pushforward data into the base K-presentation.
struct MotivicGenerator {
    std::string name;
    int dim = 0;
    bool smooth = true;
    bool compact = false;

    // Affine cells carry a trivialized cotangent bundle; their Hodge-Chern
    // image is (1+y)^dim * structure_image. Otherwise omega_images[p] is
    // the image of the p-th exterior cotangent power, p = 0..dim.
    bool trivial_cotangent = false;
    KClass structure_image;
    std::vector<KClass> omega_images;

    // compact-supports chi_y of the generator variety, used over the point
    LaurentPoly chi_y;
    long euler = 0;  // topological Euler characteristic, = chi_y at y = -1
};

class MotivicRegistry : public std::enable_shared_from_this<MotivicRegistry> {
public:
    static std::shared_ptr<const MotivicRegistry> make(std::string base_label,
                                                       std::shared_ptr<const KPresentation> target,
                                                       std::vector<MotivicGenerator> gens);

    const std::string& base_label() const { return base_; }
    const std::shared_ptr<const KPresentation>& target() const { return target_; }
    const std::vector<MotivicGenerator>& generators() const { return gens_; }
    unsigned index_of(const std::string& name) const;
    bool has(const std::string& name) const;

private:
    std::string base_;
    std::shared_ptr<const KPresentation> target_;
    std::vector<MotivicGenerator> gens_;
    void validate() const;
};

// Finite Z[L]-combination of generators over the registry's base; keys are
// (generator, L-exponent), L-exponents nonnegative.
class MotivicClass {
public:
    MotivicClass() = default;
    explicit MotivicClass(std::shared_ptr<const MotivicRegistry> reg) : reg_(std::move(reg)) {}

    static MotivicClass generator(std::shared_ptr<const MotivicRegistry> reg,
                                  const std::string& name, long mult = 1, unsigned l_exp = 0);

    const std::shared_ptr<const MotivicRegistry>& registry() const { return reg_; }
    const std::map<std::pair<unsigned, unsigned>, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(unsigned gen, unsigned l_exp, long mult);

    MotivicClass operator-() const;
    MotivicClass operator+(const MotivicClass& o) const;
    MotivicClass operator-(const MotivicClass& o) const;
    MotivicClass& operator+=(const MotivicClass& o);
    MotivicClass& operator-=(const MotivicClass& o);
    MotivicClass scaled(long s) const;
    MotivicClass l_shift(unsigned k) const;  // multiply by L^k
    bool operator==(const MotivicClass& o) const;
    bool operator!=(const MotivicClass& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::shared_ptr<const MotivicRegistry> reg_;
    std::map<std::pair<unsigned, unsigned>, long> terms_;

    void check_same(const MotivicClass& o) const;
};

// [U] = [closure] - [boundary] for an open stratum; the expansion is stored,
// never recomputed.
MotivicClass expand_open_stratum(const MotivicClass& closure, const MotivicClass& boundary);

// How powers of L pair with the Hodge-Chern evaluation. The base rule used
// everywhere outside nearby classes sends L^k to (-y)^k. The alternative
// shifts the first power to +y and composes deeper powers with the (1+y)
// unit: L^k -> y (1+y)^{k-1}.
enum class TwistRule { naive, shifted };

const char* to_label(TwistRule r);
TwistRule twist_rule_from_label(const std::string& s);

LaurentPoly twist_multiplier(TwistRule rule, unsigned l_exp);

// Hodge-Chern image of a single generator: (1+y)^dim * [O_Z] for affine
// cells, otherwise sum_p y^p [Omega^p_Z].
KClass generator_hodge_chern(const MotivicGenerator& g);

// Additive extension over the class; `rule` applies to the L-powers.
KClass hodge_chern(const MotivicClass& m, TwistRule rule = TwistRule::naive);

// Evaluation over the point: generators contribute their declared chi_y,
// L-powers contribute (-y)^k.
LaurentPoly chi_y_of(const MotivicClass& m);

// Substitution [Z] -> euler(Z), L -> 1.
long euler_of(const MotivicClass& m);

// Pushforward data of [P^1 x Z -> X] assembled from Z's data by the Kunneth
// rule: [Omega^p] maps to sum_{a+b=p} chi(P^1, Omega^a) * image(Omega^b_Z).
// Independent route for checking the L-twist rule against [P^1 x Z] - [Z].
MotivicGenerator line_product_generator(const MotivicGenerator& z);

}  // namespace mhcy
