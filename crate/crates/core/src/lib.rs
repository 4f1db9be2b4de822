//! Fractional integral and derivative operators of Marichev-Saigo-Maeda
//! (MSM), Saigo, Riemann-Liouville and Erdelyi-Kober type, applied to
//! power functions and to the Jacobi-type polynomials `M_n^(p,q)`.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::too_many_arguments)]

pub mod apply;
pub mod error;
pub mod gamma;
pub mod hypergeom;
pub mod jacobi;
pub mod ledger;
pub mod operator;
pub mod power;
pub mod quadrature;
pub mod reduction;
pub mod sum;
pub mod symbolic;
pub mod theorems;
pub mod verify;

pub use apply::{monomial, operator_apply, quadrature_supported, Integrand};
pub use error::{Error, Result};
pub use gamma::{
    binomial_real, gamma, gamma_product_eval, log_gamma_signed, pochhammer, rgamma, GammaProduct, SignedLogValue,
};
pub use hypergeom::{appell_f3, hyp2f1, pfq, HypSeriesSpec};
pub use jacobi::{
    inner_product, jacobi_from_m, jacobi_p, m_jacobi_connection, m_poly, ode_residual, orthogonality_defect, weight,
    JacobiSpec, Method, OdeForm, OdeResidual, PolySpec,
};
pub use operator::{EkParams, Family, Monomial, MsmParams, OperatorSpec, SaigoParams};
pub use power::{
    check_domain, power_image, power_schema, power_schema_printed, validate_domain, Condition, ConditionKind,
    PowerImage, PowerSchema, Reading,
};
pub use quadrature::{gauss_jacobi, quad_endpoint_singular, QuadConfig, QuadEstimate};
pub use reduction::{compare_symbolic, Reduction, SymbolicComparison};
pub use sum::CompensatedSum;
pub use symbolic::{Affine, Scalar};
pub use theorems::{
    check_identity_domain, deriv_composition_oracle, identity_conditions, image_rhs, lhs_oracle, lhs_oracle_terms,
    statement_schema, IdentityId, ImageEvaluation, PolyArgument, Side, StatementSchema,
};
