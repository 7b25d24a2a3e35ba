"""Regenerate the checked-in example files under fixtures/.

Run from the repository root:  python3 tools/make_fixtures.py
"""

import pathlib

from sl3webs import foams, webio, zoo

HERE = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = HERE / "fixtures"


def main():
    FIXTURES.mkdir(exist_ok=True)

    webs = {
        "circle.web": zoo.circle_web(),
        "arc.web": zoo.arc(),
        "y.web": zoo.y_web(),
        "theta.web": zoo.theta_web(),
        "square.web": zoo.square_web(),
        "drum.web": zoo.drum(),
        "w0.web": zoo.w0(),
        "kk_w.web": zoo.kk_w(),
        "flower_sq0.web": zoo.flower(squared_petals=(0,)),
    }
    for fname, web in webs.items():
        webio.save_web(FIXTURES / fname, web)
        print("wrote", fname)

    foam_files = {
        "sphere2.foam": zoo.sphere_foam(dots=2),
        "torus.foam": zoo.torus_foam(),
        "theta012.foam": zoo.theta_foam(0, 1, 2),
        "kk_t.foam": zoo.t_foam(),
    }
    for fname, foam in foam_files.items():
        foams.save_foam(FIXTURES / fname, foam)
        print("wrote", fname)


if __name__ == "__main__":
    main()
