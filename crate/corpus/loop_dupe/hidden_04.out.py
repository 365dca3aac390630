def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
n = 5
fact = 1
while n > 1:
    fact *= n
    n -= 1
while n > 1:
    fact *= n
    n -= 1
print(fact)
