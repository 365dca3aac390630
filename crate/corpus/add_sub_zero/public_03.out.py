def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
def digit_sum(n):
    n = abs(n)
    s = 0
    while n > 0:
        s = s + n % 10
        n = n // 10
    return s
