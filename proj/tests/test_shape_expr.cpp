#include <gtest/gtest.h>

#include "odot/cylinder.hpp"
#include "shape_expr.hpp"

using namespace odot;
using odot::cli::parse_shape;

TEST(ShapeExpr, Constructors) {
  EXPECT_TRUE(same_shape(parse_shape("point"), point()));
  EXPECT_TRUE(same_shape(parse_shape(" globe( 3 ) "), globe(3)));
  EXPECT_EQ(parse_shape("cube(2)").size(), 9);
  EXPECT_EQ(parse_shape("simplex(3)").size(), 15);
  EXPECT_EQ(parse_shape("gray(arrow,arrow)").size(), 9);
  EXPECT_TRUE(same_shape(parse_shape("atom(arrow,arrow)"), globe(2)));
  EXPECT_TRUE(same_shape(parse_shape("paste(arrow,arrow)"), paste(arrow(), arrow(), 0)));
  EXPECT_EQ(parse_shape("paste(atom(arrow,arrow), arrow, 0)").size(), 7);
  EXPECT_TRUE(same_shape(parse_shape("merger(paste(arrow,arrow,0))"), merger(paste(arrow(), arrow(), 0))));
  EXPECT_TRUE(same_shape(parse_shape("bd(globe(2),1,+)"), arrow()));
  EXPECT_TRUE(same_shape(parse_shape("bd(globe(2),0,in)"), point()));
  EXPECT_EQ(parse_shape("lcyl(arrow)").size(), 7);
  EXPECT_EQ(parse_shape("cyl(arrow)").size(), 9);
  EXPECT_TRUE(same_shape(parse_shape("invertor(arrow,L)"), parse_shape("lcyl(arrow)")));
  EXPECT_TRUE(same_shape(parse_shape("dual(simplex(2),1)"), dual(simplex(2), {1})));
  EXPECT_TRUE(same_shape(parse_shape("dual(globe(2))"), dual(globe(2), {1, 2})));
}

TEST(ShapeExpr, Errors) {
  for (const char* bad : {"", "globe", "globe(", "globe(x)", "globe(2))", "frob(arrow)", "bd(arrow,0,*)",
                          "paste(arrow)", "globe(99999999)"}) {
    try {
      parse_shape(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
  // Construction errors are not parse errors.
  EXPECT_THROW(parse_shape("paste(simplex(2),simplex(2),1)"), Error);
}
