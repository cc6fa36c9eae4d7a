#pragma once

#include <random>

#include "ddml2jolie/lemma/ast.hpp"

// Bounded random domain models for property tests. Names are drawn from
// disjoint counter-based pools (S*/C*/E* types, op* operations), so encoding
// never produces generated-name clashes by accident.
//
// With ddd_conventions set, models additionally respect the conventions the
// checker enforces: aggregates are entities, parts point at entities or
// value objects, factories build their enclosing structure from inputs that
// do not mention it, and validators live in field-less specification
// structures taking exactly one structure-typed parameter.

namespace testgen {

struct Options {
    int max_contexts = 3;
    int max_types = 5;
    int max_fields = 4;
    int max_operations = 4;
    bool ddd_conventions = false;
};

lemma::DomainModel random_model(std::mt19937& rng, const Options& options = {});

} // namespace testgen
