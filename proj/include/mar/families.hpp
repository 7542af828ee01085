#pragma once

#include "mar/families/bicircular.hpp"
#include "mar/families/cographic.hpp"
#include "mar/families/explicit.hpp"
#include "mar/families/graphic.hpp"
#include "mar/families/linear.hpp"
#include "mar/families/multigraph.hpp"
#include "mar/families/signed.hpp"
#include "mar/families/transversal.hpp"
#include "mar/families/uniform.hpp"
