#pragma once
// Umbrella for the whole library. The command line front end (cli.hpp) is
// left out on purpose: it needs the vendored argument and JSON parsers on the
// include path, which library consumers may not carry.

#include "qcoh/rational.hpp"
#include "qcoh/context.hpp"
#include "qcoh/element.hpp"
#include "qcoh/parse.hpp"
#include "qcoh/linalg.hpp"
#include "qcoh/groebner.hpp"
#include "qcoh/presentation.hpp"
#include "qcoh/builtins.hpp"
#include "qcoh/presentation_io.hpp"
#include "qcoh/projection.hpp"
#include "qcoh/evaluation.hpp"
#include "qcoh/extension_space.hpp"
#include "qcoh/degree_two.hpp"
#include "qcoh/series.hpp"
#include "qcoh/iso_solver.hpp"
#include "qcoh/verify.hpp"
