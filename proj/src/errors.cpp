#include "ttp/errors.hpp"

namespace ttp {

MetricError::MetricError(const std::string& what, int i_, int j_, int k_)
    : Error(what), i(i_), j(j_), k(k_) {}

}  // namespace ttp
