from pytest_bdd import scenarios

scenarios("estimates.feature")
