def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def is_leap(year):
    if year % 4 != 0:
        return False
    if year % 100 != 0:
        return True
    return year % 400 == 0
