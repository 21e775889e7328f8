# Say hello
print('Hello World!')
