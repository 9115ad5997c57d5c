#ifndef RAUSZER_JSON_IO_HPP
#define RAUSZER_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "rauszer/algebra.hpp"
#include "rauszer/info_system.hpp"
#include "rauszer/preorder.hpp"
#include "rauszer/representation.hpp"

namespace rauszer {

// {"n": int, "pairs": [[x,y],...]}
Preorder preorder_from_json(const nlohmann::json& doc, BuildMode mode);
nlohmann::json preorder_to_json(const Preorder& p);  // off-diagonal pairs, sorted

// {"size":n,"meet":[[..]],"join":[[..]],"bot":i,"top":j,"ops":{...}}
FiniteAlgebra algebra_from_json(const nlohmann::json& doc);
nlohmann::json algebra_to_json(const FiniteAlgebra& a);

nlohmann::json class_report_to_json(const ClassReport& r);

// {"lower":[labels],"upper":[labels],"definable":bool}
nlohmann::json approximation_to_json(const Approximation& ap, const InformationSystem& sys);

nlohmann::json embedding_report_to_json(const StoneEmbedding& emb, const PrimeFilterSpace& space);

nlohmann::json parse_json_text(const std::string& text);  // InputError on bad syntax

}  // namespace rauszer

#endif
