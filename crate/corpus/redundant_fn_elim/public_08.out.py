def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def save(record):
    return 'saved ' + record
