from integration_tests.integration_tests import main

if __name__ == '__main__':
    main()
