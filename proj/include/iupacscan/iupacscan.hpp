#pragma once

#include "iupacscan/encoding.hpp"
#include "iupacscan/io_fasta.hpp"
#include "iupacscan/match_result.hpp"
#include "iupacscan/matcher.hpp"
#include "iupacscan/oracle.hpp"
#include "iupacscan/parallel.hpp"
#include "iupacscan/prime_ref.hpp"
