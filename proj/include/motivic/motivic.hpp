#ifndef MOTIVIC_MOTIVIC_HPP
#define MOTIVIC_MOTIVIC_HPP

#include <motivic/error.hpp>
#include <motivic/prime.hpp>
#include <motivic/lring.hpp>
#include <motivic/io.hpp>
#include <motivic/dim_seq.hpp>
#include <motivic/moduli.hpp>
#include <motivic/stringy.hpp>
#include <motivic/fp.hpp>
#include <motivic/fp_matrix.hpp>
#include <motivic/fp_polynomial.hpp>
#include <motivic/repnil.hpp>
#include <motivic/galois_field.hpp>
#include <motivic/quotients.hpp>
#include <motivic/covars.hpp>
#include <motivic/acceptance.hpp>

#endif
