#pragma once

#include "flagcalc/billey.hpp"
#include "flagcalc/grassmannian.hpp"
#include "flagcalc/polynomial.hpp"
#include "flagcalc/root_system.hpp"
#include "flagcalc/weyl_group.hpp"

#include <json.hpp>

#include <string>

namespace flagcalc {

// Variable naming for rendered polynomials.
enum class VarStyle { alpha, tvars };

std::string to_text(const Polynomial& p, VarStyle style);
std::string to_latex(const Polynomial& p, VarStyle style);
std::string to_text(const TPoly& p);
std::string to_latex(const TPoly& p);

// "1,2,1"; the identity is the empty string.
std::string word_text(const Word& w);
Word parse_word(const std::string& text);
// "s_1s_2s_1", identity "e".
std::string word_latex(const Word& w);

nlohmann::json poly_to_json(const Polynomial& p, VarStyle style);
Polynomial poly_from_json(const nlohmann::json& j);
nlohmann::json tpoly_to_json(const TPoly& p);
TPoly tpoly_from_json(const nlohmann::json& j);

nlohmann::json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

nlohmann::json cartan_to_json(const CartanSpec& spec);
CartanSpec cartan_from_json(const nlohmann::json& j);

// Array of {"element": word, "value": polynomial} over the whole group.
nlohmann::json class_table_to_json(const WeylGroup& g, const GKMClass& cls);
std::vector<std::pair<Word, Polynomial>> class_table_from_json(const nlohmann::json& j);

// Two-column array environment listing sigma_v at every group element.
std::string class_table_latex(const WeylGroup& g, const Word& v_word, const GKMClass& cls);

std::string diagram_ascii(const MarkedDiagram& d);
std::string diagram_latex(const MarkedDiagram& d);

std::string partition_text(const Partition& p);
Partition parse_partition(const std::string& text);

}  // namespace flagcalc
