macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                run_example().unwrap();
            }
        }
    };
}

example!(cartan_matrix);
example!(certificates);
example!(characters);
example!(composition_factors);
example!(dihedral_induction);
example!(global_dimension);
example!(hom_character);
example!(idempotents);
example!(littlewood_richardson);
example!(partitions);
example!(quiver);
example!(resolutions);
example!(superdiagonals);
example!(surjections);
example!(verify);
