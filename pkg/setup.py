from setuptools import setup
from setuptools import find_packages

with open("README.md", "r") as fh:
    long_description = fh.read()

install_requires = ['numpy',
                    'scipy',
                    'setuptools']

tests_require = ['hypothesis']

docs_require = ['sphinx >= 1.4',
                'sphinx_rtd_theme']

setup(name='njt',
      version='0.1.0',
      description='Polynomial maps with nilpotent Jacobian matrix: tests, families and tame decompositions',
      long_description=long_description,
      long_description_content_type='text/markdown',
      license='MIT',
      install_requires=install_requires,
      tests_require=tests_require,
      extras_require={
          'tests': tests_require,
          'docs': docs_require
      },
      entry_points={
          'console_scripts': ['nj=njt.cli:main']
      },
      classifiers=[
            'Development Status :: 3 - Alpha',
            'Intended Audience :: Education',
            'Intended Audience :: Science/Research',
            'License :: OSI Approved :: MIT License',
            'Programming Language :: Python :: 3',
            'Topic :: Software Development :: Libraries :: Python Modules',
            'Topic :: Scientific/Engineering :: Mathematics',
      ],
      packages=find_packages(exclude=['examples', 'examples.*', 'tests', 'tests.*']),
      include_package_data=True)
