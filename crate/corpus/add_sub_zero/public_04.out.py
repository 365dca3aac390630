def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a
