from setuptools import setup


def package_description():
    text = open('README.md', 'r').read()
    startpos = text.find('## Introduction')
    return text[startpos:]


def install_requirements():
    return [package_string.strip() for package_string in open('requirements.txt', 'r')]


def setup_requirements():
    return [package_string.strip() for package_string in open('setup_requirements.txt', 'r')]


setup(name='bditestgen',
      version='0.1.0',
      description="Coverage-directed test generation with belief-desire-intention agents",
      long_description=package_description(),
      long_description_content_type='text/markdown',
      classifiers=[
          "Topic :: Software Development :: Testing",
          "Topic :: Scientific/Engineering :: Artificial Intelligence",
          "Topic :: Software Development :: Libraries :: Python Modules",
          "Programming Language :: Python :: 3.7",
          "Programming Language :: Python :: 3.8",
          "Natural Language :: English",
          "License :: OSI Approved :: MIT License",
          "Intended Audience :: Developers",
          "Intended Audience :: Science/Research"
      ],
      keywords="bdi agents model-based testing coverage q-learning simulation robotics",
      license='MIT',
      packages=['bditestgen',
                'bditestgen.utils',
                'bditestgen.agents',
                'bditestgen.scenario',
                'bditestgen.explorer',
                'bditestgen.testgen',
                'bditestgen.sim',
                'bditestgen.monitors',
                'bditestgen.campaign'],
      package_dir={'bditestgen': 'bditestgen'},
      package_data={'bditestgen': ['scenario/assets/*.asl', 'scenario/assets/*.csv',
                                   'scenario/assets/*.txt',
                                   'testgen/assets/*.csv']},
      setup_requires=setup_requirements(),
      install_requires=install_requirements(),
      scripts=['bin/BDITestCampaign'],
      test_suite="test",
      zip_safe=False)
