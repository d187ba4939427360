#ifndef INVTOPOS_JSON_IO_HPP_
#define INVTOPOS_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "invtopos/actions.hpp"
#include "invtopos/cosets_filters.hpp"
#include "invtopos/finite_bundles.hpp"
#include "invtopos/functor_tools.hpp"
#include "invtopos/presheaf_tensor.hpp"
#include "invtopos/sgp_core.hpp"

namespace invtopos::io {

using json = nlohmann::json;

// Formats. Wherever a document references a semigroup it accepts either
// an inline semigroup object or a path string, resolved against the
// directory of the referencing file.

json semigroup_to_json(InverseSemigroup const& s);
SemigroupPtr semigroup_from_json(json const& j);
SemigroupPtr load_semigroup(std::string const& path);

json subset_to_json(InverseSemigroup const& s, ElementSet const& members);
ElementSet subset_from_json(InverseSemigroup const& s, json const& j);

json action_to_json(PartialAction const& a, std::string const& semigroup_ref = "");
PartialAction action_from_json(json const& j, std::string const& base_dir = "");
PartialAction load_action(std::string const& path);

json functor_to_json(SetFunctor const& f, std::string const& semigroup_ref = "");
SetFunctor functor_from_json(json const& j, std::string const& base_dir = "");
SetFunctor load_functor(std::string const& path);

json presheaf_to_json(Presheaf const& p, std::string const& semigroup_ref = "");
Presheaf presheaf_from_json(json const& j, std::string const& base_dir = "");
Presheaf load_presheaf(std::string const& path);

json space_to_json(FiniteSpace const& sp);
SpacePtr space_from_json(json const& j);

json sheaf_to_json(FiniteSheaf const& sh);               // without the space
FiniteSheaf sheaf_from_json(json const& j, SpacePtr sp);  // fragment + space

json bundle_to_json(Bundle const& b, std::string const& semigroup_ref = "");
Bundle bundle_from_json(json const& j, std::string const& base_dir = "");
Bundle load_bundle(std::string const& path);

json sheaf_action_to_json(SheafAction const& sa, std::string const& semigroup_ref = "");
SheafAction sheaf_action_from_json(json const& j, std::string const& base_dir = "");
SheafAction load_sheaf_action(std::string const& path);

json load_file(std::string const& path);
void write_file(std::string const& path, json const& j);

}  // namespace invtopos::io

#endif  // INVTOPOS_JSON_IO_HPP_
