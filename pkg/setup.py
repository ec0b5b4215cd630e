from setuptools import setup, find_packages

version = '0.1.0'

setup(name='magmatic',
      version=version,
      description="Symbolic calculus and verification harness for finitely generated magmas",
      long_description="See README.md",
      classifiers=[
          'Topic :: Scientific/Engineering :: Mathematics',
          'License :: OSI Approved :: BSD License'
      ],
      keywords='magma ideal set theory pairs relations ordinals',
      license='BSD',
      packages=find_packages('src'),
      package_dir={'': 'src'},
      zip_safe=False,
      install_requires=[],
      extras_require={
          'test': ['hypothesis'],
      },
      entry_points={
          'console_scripts': ['magma=magmatic.cli:main'],
      },
      python_requires='>3.7.0',
      )
