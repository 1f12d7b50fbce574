from setuptools import setup, find_packages


def readme():
    with open('README.rst') as f:
        return f.read()


setup(name='braidfold',
      version='0.1',
      description='Exact computations with Lusztig symmetries, quantum Serre '
                  'relations and quiver folding',
      long_description=readme(),
      classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
      ],
      keywords='quantum groups braid group action quivers folding',
      license='MIT',
      packages=find_packages(),
      python_requires='>=3.9',
      install_requires=[
          'numpy',
          'scipy',
          'sympy>=1.7',
      ],
      test_suite='braidfold.tests',
      entry_points={
          'console_scripts': ['braidfold=braidfold.command_line:main'],
      },
      include_package_data=True,
      zip_safe=False)
