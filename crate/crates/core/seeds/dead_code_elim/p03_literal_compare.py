def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def greet(name):
    if 1 > 2:
        return 'impossible'
    return 'hello ' + name
# probe: greet('ann')
