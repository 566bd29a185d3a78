#pragma once

#include "fcil/closed_miner.hpp"
#include "fcil/corpus.hpp"
#include "fcil/error.hpp"
#include "fcil/format.hpp"
#include "fcil/itemset.hpp"
#include "fcil/lattice.hpp"
#include "fcil/mingen.hpp"
#include "fcil/oracle.hpp"
#include "fcil/pipeline.hpp"
#include "fcil/ratio.hpp"
#include "fcil/rulegen.hpp"
#include "fcil/tidset.hpp"
#include "fcil/verify.hpp"
