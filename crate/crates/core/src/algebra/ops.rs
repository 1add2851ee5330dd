/// Implements the std arithmetic operators for a type implementing `Ring`.
#[macro_export]
#[doc(hidden)]
macro_rules! impl_ring_ops {
    ([$($g:tt)*] $t:ty) => {
        impl<$($g)*> std::ops::Add<&$t> for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                $crate::algebra::Ring::add(self, rhs)
            }
        }
        impl<$($g)*> std::ops::Sub<&$t> for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                $crate::algebra::Ring::sub(self, rhs)
            }
        }
        impl<$($g)*> std::ops::Mul<&$t> for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                $crate::algebra::Ring::mul(self, rhs)
            }
        }
        impl<$($g)*> std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::algebra::Ring::neg(self)
            }
        }
        impl<$($g)*> std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                $crate::algebra::Ring::add(&self, &rhs)
            }
        }
        impl<$($g)*> std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                $crate::algebra::Ring::sub(&self, &rhs)
            }
        }
        impl<$($g)*> std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                $crate::algebra::Ring::mul(&self, &rhs)
            }
        }
        impl<$($g)*> std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::algebra::Ring::neg(&self)
            }
        }
    };
}
