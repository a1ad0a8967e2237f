from pytest_bdd import scenarios

scenarios("verification.feature")
