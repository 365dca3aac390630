def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def hidden_files(names):
    hidden = [name for name in names if name.startswith('.')]
    return hidden
