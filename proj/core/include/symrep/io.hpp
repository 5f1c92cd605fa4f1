#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "symrep/character.hpp"
#include "symrep/fock.hpp"
#include "symrep/matrix.hpp"
#include "symrep/polynomial.hpp"
#include "symrep/tableau.hpp"

namespace symrep {

/// Rationals serialize as "p/q" strings (plain "p" when q = 1) so JSON
/// round-trips stay lossless; floats use 17 significant digits.
std::string rational_str(const Rational& r);
std::string float_str(double v);

nlohmann::json to_json(const Partition& la);
nlohmann::json to_json(const StandardTableau& t);
nlohmann::json to_json(const ExactMatrix& m);
nlohmann::json to_json(const FloatMatrix& m);
nlohmann::json to_json(const GradedPolynomial& p);
nlohmann::json to_json(const FockVector& v);
nlohmann::json to_json(const CharacterTable& t);

/// Rows la, columns rho; cycle types quoted as "3+1+1".
std::string character_table_csv(const CharacterTable& t);

} // namespace symrep
