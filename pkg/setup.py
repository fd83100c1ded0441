# Always prefer setuptools over distutils
from setuptools import setup
# To use a consistent encoding
from codecs import open
from os import path

# to deploy:
# pip install wheel, twine
# python setup.py sdist
# python setup.py bdist_wheel
# twine upload dist/*
# rm -r build; rm -r dist; rm -r *.egg-info

root_dir_fp = path.abspath(path.dirname(__file__))

def get_long_description():
    return '''rankloci computes, in exact integer arithmetic, the degrees of the varieties obtained by projecting the locus of n by n matrices of rank at most r away from a set of coordinate entries. Degrees are evaluated as intersection numbers in the Chow ring of a Grassmannian, using a Schubert-basis engine with Pieri and Jacobi-Trudi multiplication, the Grassmann classes of row, column, corner and square blocks, and the closed formulas available for special entry patterns. A command line tool prints single degrees, per-rank tables and Grassmann classes, and runs a verification suite against an independent symbolic evaluation and published tables.
'''

def get_version():
    with open(path.join(root_dir_fp, 'rankloci', '__init__.py'), encoding='utf-8') as f:
        for l in f:
            if l.startswith('__version__'):
                if '#' in l:
                    l = l.split('#')[0].strip()
                return l.split('=')[-1].strip()[1:-1]

setup(
    name='rankloci',
    version=get_version(),
    description='Exact degrees of projections of rank loci via Grassmannian intersection theory',
    long_description=get_long_description(),
    python_requires='>=3.8',
    install_requires=['numpy>=1.16', 'sympy>=1.5'],
    license='MIT',

    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
            'Development Status :: 3 - Alpha',
            'Intended Audience :: Science/Research',
            'Topic :: Scientific/Engineering :: Mathematics',
            'License :: OSI Approved :: MIT License',
            'Operating System :: OS Independent',
            'Programming Language :: Python :: 3.8',
            'Programming Language :: Python :: 3.9',
            'Programming Language :: Python :: 3.10',
            ],

    keywords='grassmannian schubert chow ring degree rank locus enumerative geometry',
    packages=[
            'rankloci',
            'rankloci.core',
            'rankloci.performance',
            ],
    entry_points={
            'console_scripts': ['rankloci=rankloci.cli:main'],
            },
)
