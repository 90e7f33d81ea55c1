#pragma once

#include "tcalab/errors.hpp"
#include "tcalab/hilbert.hpp"
#include "tcalab/homalg.hpp"
#include "tcalab/io.hpp"
#include "tcalab/ktheory.hpp"
#include "tcalab/linalg.hpp"
#include "tcalab/lincomb.hpp"
#include "tcalab/mpoly.hpp"
#include "tcalab/partition.hpp"
#include "tcalab/quiver.hpp"
#include "tcalab/rational.hpp"
#include "tcalab/sym_char.hpp"
#include "tcalab/upoly.hpp"
