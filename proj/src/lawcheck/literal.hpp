#pragma once

// Literal reading of K1-K5 on families over at most six things, one bit per subset.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "desire/sds.hpp"

namespace desire::lawcheck::literal {

using Bits = std::uint64_t;

Bits bits_of(const SetFamily& f);
Sds family_of(std::size_t n, Bits b);
// Every set {t_sigma} with t_sigma in cl(sigma(W)).
Bits raw_products(const Universe& u, const std::vector<Subset>& w);
// The first failing axiom, K5 quantified over every non-empty W within K.
std::optional<std::string> violation(const Universe& u, Bits k);
std::vector<Bits> coherent_families(const Universe& u);
// Intersection of the coherent families containing w; every subset when there is none.
Bits least_containing(const std::vector<Bits>& coherent, std::size_t n, Bits w);

}  // namespace desire::lawcheck::literal
