#pragma once

#include <string>

#include "ttw/genpoly.hpp"
#include "ttw/weyl.hpp"

namespace ttw {

// File formats. Rationals travel as decimal strings so arbitrary precision
// survives transport bit-exactly; serialization is byte-deterministic.
//
//   polyring term list: [{"num":"..","den":"..","exp":{"t":i,"u":j,"a":k,"b":l,"w":m}}]
//   diffop-v1:  {"format":"diffop-v1","terms":[{"dt":i,"du":j,"coeff":[...]}]}
//   genpoly-v1: {"format":"genpoly-v1","monomials":[{"H":n,"I1":m,"I2":p,"I12":q,"coeff":[...]}]}

std::string poly_to_json(const ParamPoly& p);
ParamPoly poly_from_json(const std::string& text);

std::string diffop_to_json(const DiffOp& op);
DiffOp diffop_from_json(const std::string& text);

std::string genpoly_to_json(const GenPolynomial& g);
GenPolynomial genpoly_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

DiffOp load_diffop(const std::string& path);
void save_diffop(const std::string& path, const DiffOp& op);
GenPolynomial load_genpoly(const std::string& path);
void save_genpoly(const std::string& path, const GenPolynomial& g);

}  // namespace ttw
