#pragma once

#include "linext/arith.hpp"
#include "linext/atlas.hpp"
#include "linext/canonical.hpp"
#include "linext/certificate_io.hpp"
#include "linext/enumerate.hpp"
#include "linext/error.hpp"
#include "linext/extension_count.hpp"
#include "linext/lambda_search.hpp"
#include "linext/poset.hpp"
#include "linext/poset_io.hpp"
#include "linext/synthesizer.hpp"
#include "linext/trace.hpp"
