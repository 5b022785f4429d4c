#pragma once

#include "strathom/errors.hpp"
#include "strathom/field.hpp"
#include "strathom/matrix.hpp"
#include "strathom/algebra.hpp"
#include "strathom/quiver.hpp"
#include "strathom/module.hpp"
#include "strathom/bimodule.hpp"
#include "strathom/resolution.hpp"
#include "strathom/functors.hpp"
#include "strathom/derived.hpp"
#include "strathom/tilting.hpp"
#include "strathom/certificate.hpp"
#include "strathom/strat.hpp"
#include "strathom/format.hpp"
#include "strathom/workspace.hpp"
#include "strathom/random.hpp"
#include "strathom/properties.hpp"
#include "strathom/corpus.hpp"
#include "strathom/report.hpp"
#include "strathom/commands.hpp"
