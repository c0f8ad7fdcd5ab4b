// Sign-exact orientation and incircle tests: filtered double evaluation with
// an exact fallback built on floating-point expansions (two_sum / two_product
// error-free transforms, expansion sums, expansion scaling). The expansion
// routines follow Shewchuk's arbitrary-precision scheme; the exact fallbacks
// evaluate the full determinant, so no intermediate adaptive stages are
// needed. This file must be compiled with -ffp-contract=off.

#include "achull/predicates.hpp"

#include <cmath>

#include "achull/geom.hpp"

namespace achull {
namespace {

// Machine epsilon in Shewchuk's sense: 2^-53.
constexpr double kEps = 1.1102230246251565e-16;
constexpr double kSplitter = 134217729.0;  // 2^27 + 1
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccErrBound = (10.0 + 96.0 * kEps) * kEps;

inline void two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    double bvirt = x - a;
    double avirt = x - bvirt;
    double bround = b - bvirt;
    double around = a - avirt;
    y = around + bround;
}

inline void two_diff(double a, double b, double& x, double& y) {
    x = a - b;
    double bvirt = a - x;
    double avirt = x + bvirt;
    double bround = bvirt - b;
    double around = a - avirt;
    y = around + bround;
}

inline void split(double a, double& hi, double& lo) {
    double c = kSplitter * a;
    double abig = c - a;
    hi = c - abig;
    lo = a - hi;
}

inline void two_product(double a, double b, double& x, double& y) {
    x = a * b;
    double ahi, alo, bhi, blo;
    split(a, ahi, alo);
    split(b, bhi, blo);
    double err1 = x - ahi * bhi;
    double err2 = err1 - alo * bhi;
    double err3 = err2 - ahi * blo;
    y = alo * blo - err3;
}

inline void two_one_diff(double a1, double a0, double b, double& x2, double& x1, double& x0) {
    double i;
    two_diff(a0, b, i, x0);
    two_sum(a1, i, x2, x1);
}

// (a1,a0) - (b1,b0) as a four-component expansion x3..x0 (increasing order).
inline void two_two_diff(double a1, double a0, double b1, double b0, double& x3, double& x2,
                         double& x1, double& x0) {
    double j, r0;
    two_one_diff(a1, a0, b0, j, r0, x0);
    two_one_diff(j, r0, b1, x3, x2, x1);
}

// h = e + f where e and f are nonoverlapping expansions sorted in increasing
// magnitude; zero components are dropped. Returns the length of h (>= 1).
int fast_expansion_sum_zeroelim(int elen, const double* e, int flen, const double* f, double* h) {
    double q;
    int eindex = 0, findex = 0, hindex = 0;
    double enow = e[0];
    double fnow = f[0];
    if ((fnow > enow) == (fnow > -enow)) {
        q = enow;
        enow = e[++eindex];
    } else {
        q = fnow;
        fnow = f[++findex];
    }
    double qnew, hh;
    if ((eindex < elen) && (findex < flen)) {
        if ((fnow > enow) == (fnow > -enow)) {
            two_sum(enow, q, qnew, hh);
            enow = e[++eindex];
        } else {
            two_sum(fnow, q, qnew, hh);
            fnow = f[++findex];
        }
        q = qnew;
        if (hh != 0.0) h[hindex++] = hh;
        while ((eindex < elen) && (findex < flen)) {
            if ((fnow > enow) == (fnow > -enow)) {
                two_sum(q, enow, qnew, hh);
                enow = e[++eindex];
            } else {
                two_sum(q, fnow, qnew, hh);
                fnow = f[++findex];
            }
            q = qnew;
            if (hh != 0.0) h[hindex++] = hh;
        }
    }
    while (eindex < elen) {
        two_sum(q, enow, qnew, hh);
        enow = e[++eindex];
        q = qnew;
        if (hh != 0.0) h[hindex++] = hh;
    }
    while (findex < flen) {
        two_sum(q, fnow, qnew, hh);
        fnow = f[++findex];
        q = qnew;
        if (hh != 0.0) h[hindex++] = hh;
    }
    if ((q != 0.0) || (hindex == 0)) {
        h[hindex++] = q;
    }
    return hindex;
}

// h = e * b; zero components dropped. Returns the length of h (>= 1).
int scale_expansion_zeroelim(int elen, const double* e, double b, double* h) {
    double q, sum, hh, product1, product0;
    int hindex = 0;
    two_product(e[0], b, q, hh);
    if (hh != 0.0) h[hindex++] = hh;
    for (int eindex = 1; eindex < elen; eindex++) {
        two_product(e[eindex], b, product1, product0);
        two_sum(q, product0, sum, hh);
        if (hh != 0.0) h[hindex++] = hh;
        two_sum(product1, sum, q, hh);
        if (hh != 0.0) h[hindex++] = hh;
    }
    if ((q != 0.0) || (hindex == 0)) {
        h[hindex++] = q;
    }
    return hindex;
}

// Exact sign of |ax ay 1; bx by 1; cx cy 1| by summing the six signed
// products as expansions.
double orient2d_exact(const Point2& pa, const Point2& pb, const Point2& pc) {
    double axby1, axby0, axcy1, axcy0, aybx1, aybx0;
    double aycx1, aycx0, bxcy1, bxcy0, bycx1, bycx0;
    double aterms[4], bterms[4], cterms[4];
    double v[8], w[12];

    two_product(pa.x, pb.y, axby1, axby0);
    two_product(pa.x, pc.y, axcy1, axcy0);
    two_two_diff(axby1, axby0, axcy1, axcy0, aterms[3], aterms[2], aterms[1], aterms[0]);

    two_product(pb.x, pc.y, bxcy1, bxcy0);
    two_product(pb.x, pa.y, aybx1, aybx0);
    two_two_diff(bxcy1, bxcy0, aybx1, aybx0, bterms[3], bterms[2], bterms[1], bterms[0]);

    two_product(pc.x, pa.y, aycx1, aycx0);
    two_product(pc.x, pb.y, bycx1, bycx0);
    two_two_diff(aycx1, aycx0, bycx1, bycx0, cterms[3], cterms[2], cterms[1], cterms[0]);

    int vlength = fast_expansion_sum_zeroelim(4, aterms, 4, bterms, v);
    int wlength = fast_expansion_sum_zeroelim(vlength, v, 4, cterms, w);
    return w[wlength - 1];
}

// Exact sign of the 4x4 incircle determinant via cofactor expansion. Buffer
// bounds follow the worst-case expansion growth of each step.
double incircle_exact(const Point2& pa, const Point2& pb, const Point2& pc, const Point2& pd) {
    double axby1, bxay1, axby0, bxay0;
    double bxcy1, cxby1, bxcy0, cxby0;
    double cxdy1, dxcy1, cxdy0, dxcy0;
    double dxay1, axdy1, dxay0, axdy0;
    double axcy1, cxay1, axcy0, cxay0;
    double bxdy1, dxby1, bxdy0, dxby0;
    double ab[4], bc[4], cd[4], da[4], ac[4], bd[4];
    double temp8[8];
    double abc[12], bcd[12], cda[12], dab[12];
    double det24x[24], det24y[24], det48x[48], det48y[48];
    double adet[96], bdet[96], cdet[96], ddet[96];
    double abdet[192], cddet[192];
    double deter[384];

    two_product(pa.x, pb.y, axby1, axby0);
    two_product(pb.x, pa.y, bxay1, bxay0);
    two_two_diff(axby1, axby0, bxay1, bxay0, ab[3], ab[2], ab[1], ab[0]);

    two_product(pb.x, pc.y, bxcy1, bxcy0);
    two_product(pc.x, pb.y, cxby1, cxby0);
    two_two_diff(bxcy1, bxcy0, cxby1, cxby0, bc[3], bc[2], bc[1], bc[0]);

    two_product(pc.x, pd.y, cxdy1, cxdy0);
    two_product(pd.x, pc.y, dxcy1, dxcy0);
    two_two_diff(cxdy1, cxdy0, dxcy1, dxcy0, cd[3], cd[2], cd[1], cd[0]);

    two_product(pd.x, pa.y, dxay1, dxay0);
    two_product(pa.x, pd.y, axdy1, axdy0);
    two_two_diff(dxay1, dxay0, axdy1, axdy0, da[3], da[2], da[1], da[0]);

    two_product(pa.x, pc.y, axcy1, axcy0);
    two_product(pc.x, pa.y, cxay1, cxay0);
    two_two_diff(axcy1, axcy0, cxay1, cxay0, ac[3], ac[2], ac[1], ac[0]);

    two_product(pb.x, pd.y, bxdy1, bxdy0);
    two_product(pd.x, pb.y, dxby1, dxby0);
    two_two_diff(bxdy1, bxdy0, dxby1, dxby0, bd[3], bd[2], bd[1], bd[0]);

    int templen = fast_expansion_sum_zeroelim(4, cd, 4, da, temp8);
    int cdalen = fast_expansion_sum_zeroelim(templen, temp8, 4, ac, cda);
    templen = fast_expansion_sum_zeroelim(4, da, 4, ab, temp8);
    int dablen = fast_expansion_sum_zeroelim(templen, temp8, 4, bd, dab);
    for (int i = 0; i < 4; i++) {
        bd[i] = -bd[i];
        ac[i] = -ac[i];
    }
    templen = fast_expansion_sum_zeroelim(4, ab, 4, bc, temp8);
    int abclen = fast_expansion_sum_zeroelim(templen, temp8, 4, ac, abc);
    templen = fast_expansion_sum_zeroelim(4, bc, 4, cd, temp8);
    int bcdlen = fast_expansion_sum_zeroelim(templen, temp8, 4, bd, bcd);

    int xlen = scale_expansion_zeroelim(bcdlen, bcd, pa.x, det24x);
    xlen = scale_expansion_zeroelim(xlen, det24x, pa.x, det48x);
    int ylen = scale_expansion_zeroelim(bcdlen, bcd, pa.y, det24y);
    ylen = scale_expansion_zeroelim(ylen, det24y, pa.y, det48y);
    int alen = fast_expansion_sum_zeroelim(xlen, det48x, ylen, det48y, adet);

    xlen = scale_expansion_zeroelim(cdalen, cda, pb.x, det24x);
    xlen = scale_expansion_zeroelim(xlen, det24x, -pb.x, det48x);
    ylen = scale_expansion_zeroelim(cdalen, cda, pb.y, det24y);
    ylen = scale_expansion_zeroelim(ylen, det24y, -pb.y, det48y);
    int blen = fast_expansion_sum_zeroelim(xlen, det48x, ylen, det48y, bdet);

    xlen = scale_expansion_zeroelim(dablen, dab, pc.x, det24x);
    xlen = scale_expansion_zeroelim(xlen, det24x, pc.x, det48x);
    ylen = scale_expansion_zeroelim(dablen, dab, pc.y, det24y);
    ylen = scale_expansion_zeroelim(ylen, det24y, pc.y, det48y);
    int clen = fast_expansion_sum_zeroelim(xlen, det48x, ylen, det48y, cdet);

    xlen = scale_expansion_zeroelim(abclen, abc, pd.x, det24x);
    xlen = scale_expansion_zeroelim(xlen, det24x, -pd.x, det48x);
    ylen = scale_expansion_zeroelim(abclen, abc, pd.y, det24y);
    ylen = scale_expansion_zeroelim(ylen, det24y, -pd.y, det48y);
    int dlen = fast_expansion_sum_zeroelim(xlen, det48x, ylen, det48y, ddet);

    int ablen = fast_expansion_sum_zeroelim(alen, adet, blen, bdet, abdet);
    int cdlen = fast_expansion_sum_zeroelim(clen, cdet, dlen, ddet, cddet);
    int deterlen = fast_expansion_sum_zeroelim(ablen, abdet, cdlen, cddet, deter);
    return deter[deterlen - 1];
}

}  // namespace

double orient2d(const Point2& pa, const Point2& pb, const Point2& pc) {
    double detleft = (pa.x - pc.x) * (pb.y - pc.y);
    double detright = (pa.y - pc.y) * (pb.x - pc.x);
    double det = detleft - detright;
    double detsum;

    if (detleft > 0.0) {
        if (detright <= 0.0) return det;
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return det;
        detsum = -detleft - detright;
    } else {
        return det;
    }

    double errbound = kCcwErrBound * detsum;
    if ((det >= errbound) || (-det >= errbound)) return det;
    return orient2d_exact(pa, pb, pc);
}

double incircle(const Point2& pa, const Point2& pb, const Point2& pc, const Point2& pd) {
    double adx = pa.x - pd.x;
    double bdx = pb.x - pd.x;
    double cdx = pc.x - pd.x;
    double ady = pa.y - pd.y;
    double bdy = pb.y - pd.y;
    double cdy = pc.y - pd.y;

    double bdxcdy = bdx * cdy;
    double cdxbdy = cdx * bdy;
    double alift = adx * adx + ady * ady;

    double cdxady = cdx * ady;
    double adxcdy = adx * cdy;
    double blift = bdx * bdx + bdy * bdy;

    double adxbdy = adx * bdy;
    double bdxady = bdx * ady;
    double clift = cdx * cdx + cdy * cdy;

    double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);

    double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                       (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                       (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    double errbound = kIccErrBound * permanent;
    if ((det > errbound) || (-det > errbound)) return det;
    return incircle_exact(pa, pb, pc, pd);
}

}  // namespace achull
