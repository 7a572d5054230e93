"""PD codes shared by several test modules."""

TREFOIL_RIGHT_PD = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"
TREFOIL_LEFT_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
HOPF_NEGATIVE_PD = "X(1,4,2,3) X(3,2,4,1)"
FIGURE_EIGHT_PD = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"
